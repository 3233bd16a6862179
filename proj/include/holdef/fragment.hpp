/* Copyright 2026 The holdef Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "holdef/deps.hpp"
#include "holdef/result.hpp"
#include "holdef/syntax.hpp"
#include "holdef/theory.hpp"

namespace holdef {

//------------------------------------------------------------------------------
// Total fragment

inline bool in_total_fragment_types(const Signature& sig, const Type& ty) {
  return ty.is_ground() && !is_builtin_type(ty) && type_ok(sig.tysof, ty);
}

inline bool in_total_fragment_consts(const Signature& sig, const ConstInstance& c) {
  if (!c.ty.is_ground() || c.name == "=") return false;
  auto it = sig.tmsof.find(c.name);
  if (it == sig.tmsof.end() || !is_instance_of(it->second, c.ty)) return false;
  return builtin_closure_member([&](const Type& t) { return in_total_fragment_types(sig, t); }, c.ty);
}

/// Ground types of the signature whose type depth is at most `depth`.
inline std::vector<Type> ground_types(const Signature& sig, std::size_t depth) {
  std::set<Type> level;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::set<Type> next;
    std::vector<Type> prev(level.begin(), level.end());
    for (const auto& [k, arity] : sig.tysof) {
      if (arity == 0) {
        next.insert(tyapp(k, {}));
        continue;
      }
      std::vector<std::size_t> idx(arity, 0);
      if (prev.empty()) continue;
      while (true) {
        std::vector<Type> args;
        for (auto i : idx) args.push_back(prev[i]);
        next.insert(tyapp(k, std::move(args)));
        std::size_t p = 0;
        while (p < arity && ++idx[p] == prev.size()) idx[p++] = 0;
        if (p == arity) break;
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

/// Ground substitutions for `vars` ranging over `range`, in lexicographic order.
inline std::vector<TypeSubst> ground_substs(const std::vector<std::string>& vars, const std::vector<Type>& range) {
  std::vector<TypeSubst> out;
  if (vars.empty()) return {TypeSubst{}};
  if (range.empty()) return out;
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    TypeSubst th;
    for (std::size_t i = 0; i < vars.size(); ++i) th.bind(vars[i], range[idx[i]]);
    out.push_back(std::move(th));
    std::size_t p = vars.size();
    while (p > 0 && ++idx[p - 1] == range.size()) idx[--p] = 0;
    if (p == 0) break;
  }
  return out;
}

/// Ground instances of declared non-built-in constants, substituting types of
/// depth at most `depth` for their type variables.
inline std::vector<ConstInstance> ground_const_instances(const Signature& sig, std::size_t depth) {
  auto range = ground_types(sig, depth);
  std::vector<ConstInstance> out;
  for (const auto& [c, ty] : sig.tmsof) {
    if (c == "=") continue;
    for (const auto& th : ground_substs(tyvars(ty), range)) out.push_back({c, apply_subst_type(th, ty)});
  }
  return out;
}

//------------------------------------------------------------------------------
// Independent fragment

/// The fragment of `host` independent of the apex symbols U in ctxt.
struct FragmentSpec {
  Context ctxt;
  std::vector<DepNode> U;
  Signature host;
  std::vector<DepEdge> edges;
  std::size_t bound = 100000;
};

inline FragmentSpec make_fragment_spec(Context ctxt, std::vector<DepNode> U, Signature host) {
  auto edges = dep_edges(ctxt);
  return FragmentSpec{std::move(ctxt), std::move(U), std::move(host), std::move(edges)};
}

enum class Tri { No, Yes, Unknown };

inline const char* tri_name(Tri t) { return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "unknown"; }

struct VQuery {
  Tri answer = Tri::No;
  std::vector<DepNode> path;  // x ... reached instance of u, when answer is Yes
};

/// Whether x depends, reflexively and transitively, on an instance of some u ∈ U.
inline VQuery in_V(const FragmentSpec& spec, const DepNode& x) {
  auto hits = [&](const DepNode& n) {
    return std::any_of(spec.U.begin(), spec.U.end(), [&](const DepNode& u) { return node_instance_of(u, n); });
  };
  std::map<DepNode, std::optional<DepNode>> parent{{x, std::nullopt}};
  std::deque<DepNode> queue{x};
  while (!queue.empty()) {
    DepNode n = queue.front();
    queue.pop_front();
    if (hits(n)) {
      VQuery q{Tri::Yes, {}};
      for (std::optional<DepNode> p = n; p; p = parent.at(*p)) q.path.insert(q.path.begin(), *p);
      return q;
    }
    if (parent.size() > spec.bound) return {Tri::Unknown, {}};
    for (auto& m : dep_step_instances(spec.edges, n)) {
      if (parent.count(m)) continue;
      parent.emplace(m, n);
      queue.push_back(m);
    }
  }
  return {Tri::No, {}};
}

inline Tri fragment_membership(const FragmentSpec& spec, bool in_host, const DepNode& x) {
  if (!in_host) return Tri::No;
  switch (in_V(spec, x).answer) {
    case Tri::Yes: return Tri::No;
    case Tri::No: return Tri::Yes;
    default: return Tri::Unknown;
  }
}

inline Tri in_indep_frag_types(const FragmentSpec& spec, const Type& ty) {
  return fragment_membership(spec, in_total_fragment_types(spec.host, ty), DepNode(ty));
}

inline Tri in_indep_frag_consts(const FragmentSpec& spec, const ConstInstance& c) {
  return fragment_membership(spec, in_total_fragment_consts(spec.host, c), DepNode(c));
}

/// Closure of the fragment's type side under Bool and the function space.
inline Tri in_types_of_frag(const FragmentSpec& spec, const Type& ty) {
  if (ty.is_bool()) return Tri::Yes;
  if (ty.is_fun()) {
    Tri a = in_types_of_frag(spec, ty.dom());
    if (a == Tri::No) return a;
    Tri b = in_types_of_frag(spec, ty.rng());
    if (b == Tri::No) return b;
    return a == Tri::Yes && b == Tri::Yes ? Tri::Yes : Tri::Unknown;
  }
  return in_indep_frag_types(spec, ty);
}

/// The fragment independent of the newest update of ctxt_ext, taken inside
/// the total fragment of `host`.
inline FragmentSpec indep_frag_upd_spec(const Context& ctxt_ext, const Signature& host) {
  std::vector<DepNode> U = ctxt_ext.size() ? upd_introduces(ctxt_ext.newest()) : std::vector<DepNode>{};
  return make_fragment_spec(ctxt_ext, std::move(U), host);
}

/// Host = signature of the extended context.
inline FragmentSpec indep_frag_upd_spec(const Context& ctxt_ext) { return indep_frag_upd_spec(ctxt_ext, ctxt_ext.sig()); }

/// Every sampled fragment constant has its type among the fragment's types.
inline Status check_is_sig_fragment(const FragmentSpec& spec, const std::vector<ConstInstance>& sample) {
  for (const auto& c : sample) {
    if (in_indep_frag_consts(spec, c) != Tri::Yes) continue;
    if (in_types_of_frag(spec, c.ty) != Tri::Yes)
      return Error{Errc::FragmentViolation, "constant " + c.name + ":" + to_string(c.ty) +
                                                " is in the fragment but its type is not"};
  }
  return ok_status();
}

}  // namespace holdef
