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

// Test-only oracles. Each recomputes a library answer by naive enumeration
// and shares no code with the function it checks.

#pragma once

#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "holdef/frontend.hpp"

namespace holdef::testing {

inline std::string fixture_path(const std::string& name) { return std::string(HOLDEF_FIXTURES) + "/" + name; }

/// Fixtures expected to check, in a fixed order.
inline const std::vector<std::string>& definitional_fixtures() {
  static const std::vector<std::string> names{"fixture41.thy", "lex.thy", "typedef.thy", "overload.thy", "decls.thy"};
  return names;
}

inline Elaborated load_fixture(const std::string& name) {
  auto e = load_theory_file(fixture_path(name));
  if (!e) throw HolError(e.error());
  return *e;
}

/// Ground types whose constructor nesting is at most `depth`, nullary
/// constructors counting as depth 1. Built level by level from the arities.
inline std::set<Type> oracle_ground_types(const std::map<std::string, std::size_t>& tysof, std::size_t depth) {
  std::set<Type> all;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Type> below(all.begin(), all.end());
    std::set<Type> next = all;
    for (const auto& [name, arity] : tysof) {
      if (arity == 0) {
        next.insert(tyapp(name, {}));
        continue;
      }
      if (below.empty()) continue;
      std::vector<std::size_t> pick(arity, 0);
      while (true) {
        std::vector<Type> args;
        for (auto i : pick) args.push_back(below[i]);
        next.insert(tyapp(name, args));
        std::size_t k = 0;
        while (k < arity && ++pick[k] == below.size()) pick[k++] = 0;
        if (k == arity) break;
      }
    }
    all = std::move(next);
  }
  return all;
}

inline void oracle_subtypes(const Type& ty, std::set<Type>& out) {
  out.insert(ty);
  if (!ty.is_var())
    for (const auto& a : ty.args()) oracle_subtypes(a, out);
}

inline Type oracle_subst(const std::map<std::string, Type>& s, const Type& ty) {
  if (ty.is_var()) {
    auto it = s.find(ty.name());
    return it == s.end() ? ty : it->second;
  }
  std::vector<Type> args;
  for (const auto& a : ty.args()) args.push_back(oracle_subst(s, a));
  return tyapp(ty.name(), args);
}

inline DepNode oracle_subst(const std::map<std::string, Type>& s, const DepNode& n) {
  if (n.is_type()) return DepNode(oracle_subst(s, n.type()));
  return DepNode(ConstInstance{n.constant().name, oracle_subst(s, n.constant().ty)});
}

inline std::set<std::string> oracle_vars(const DepNode& n) {
  std::set<std::string> out;
  std::vector<Type> stack{n.is_type() ? n.type() : n.constant().ty};
  while (!stack.empty()) {
    Type t = stack.back();
    stack.pop_back();
    if (t.is_var()) out.insert(t.name());
    else
      for (const auto& a : t.args()) stack.push_back(a);
  }
  return out;
}

/// All substitutions of vars drawn from `range`.
inline std::vector<std::map<std::string, Type>> oracle_assignments(const std::set<std::string>& vars,
                                                                   const std::vector<Type>& range) {
  std::vector<std::map<std::string, Type>> out{{}};
  for (const auto& v : vars) {
    std::vector<std::map<std::string, Type>> next;
    for (const auto& s : out)
      for (const auto& t : range) {
        auto s2 = s;
        s2[v] = t;
        next.push_back(std::move(s2));
      }
    out = std::move(next);
  }
  return out;
}

/// One ground step by trying every assignment of the edge source's variables
/// to subterms of n, keeping those that reproduce n exactly.
inline std::set<DepNode> oracle_step(const std::vector<DepEdge>& edges, const DepNode& n) {
  std::set<Type> subs;
  oracle_subtypes(n.is_type() ? n.type() : n.constant().ty, subs);
  std::vector<Type> range(subs.begin(), subs.end());
  std::set<DepNode> out;
  for (const auto& e : edges) {
    if (e.src.is_type() != n.is_type()) continue;
    if (!n.is_type() && e.src.constant().name != n.constant().name) continue;
    for (const auto& s : oracle_assignments(oracle_vars(e.src), range))
      if (oracle_subst(s, e.src) == n) out.insert(oracle_subst(s, e.dst));
  }
  return out;
}

template <class Step>
std::set<DepNode> reachable(const DepNode& start, Step step, std::size_t limit = 100000) {
  std::set<DepNode> seen{start};
  std::deque<DepNode> queue{start};
  while (!queue.empty() && seen.size() < limit) {
    DepNode n = queue.front();
    queue.pop_front();
    for (const auto& m : step(n))
      if (seen.insert(m).second) queue.push_back(m);
  }
  return seen;
}

/// Ground instances of every edge source, type variables drawn from the
/// ground types of sig up to `depth` (function types included).
inline std::set<DepNode> oracle_ground_sources(const std::vector<DepEdge>& edges, const Signature& sig,
                                               std::size_t depth) {
  std::set<Type> range = oracle_ground_types(sig.tysof, depth);
  std::vector<Type> r(range.begin(), range.end());
  std::set<DepNode> out;
  for (const auto& e : edges)
    for (const auto& s : oracle_assignments(oracle_vars(e.src), r)) out.insert(oracle_subst(s, e.src));
  return out;
}

/// Random type over the given constructors, at most `depth` deep.
inline Type random_type(std::mt19937& rng, const std::map<std::string, std::size_t>& tysof,
                        const std::vector<std::string>& vars, std::size_t depth) {
  std::vector<std::pair<std::string, std::size_t>> cons(tysof.begin(), tysof.end());
  std::vector<std::pair<std::string, std::size_t>> leaves;
  for (const auto& c : cons)
    if (c.second == 0) leaves.push_back(c);
  std::uniform_int_distribution<std::size_t> coin(0, 3);
  if (depth <= 1 || coin(rng) == 0) {
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, leaves.size() + vars.size() - 1)(rng);
    if (pick < vars.size()) return tyvar(vars[pick]);
    return tyapp(leaves[pick - vars.size()].first, {});
  }
  const auto& c = cons[std::uniform_int_distribution<std::size_t>(0, cons.size() - 1)(rng)];
  std::vector<Type> args;
  for (std::size_t i = 0; i < c.second; ++i) args.push_back(random_type(rng, tysof, vars, depth - 1));
  return tyapp(c.first, args);
}

/// A small random definitional context over init: a few type constructors,
/// polymorphic declarations, an arbitrary element `arb : a`, then fresh and
/// overloading definitions whose witnesses are constant instances. Updates
/// the checker rejects are skipped.
inline Context random_context(std::mt19937& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  Context ctxt = init_ctxt();
  std::map<std::string, std::size_t> tysof{{"bool", 0}, {"fun", 2}};
  std::size_t ntypes = pick(1, 3);
  for (std::size_t i = 0; i < ntypes; ++i) {
    std::string name = "t" + std::to_string(i);
    std::size_t arity = i == 0 ? 0 : pick(0, 2);
    ctxt = extend(ctxt, NewType{name, arity}).value();
    tysof[name] = arity;
  }
  ctxt = extend(ctxt, NewConst{"arb", tyvar("a")}).value();
  std::vector<std::pair<std::string, Type>> decls;
  std::size_t nconsts = pick(2, 4);
  for (std::size_t i = 0; i < nconsts; ++i) {
    std::string name = "k" + std::to_string(i);
    Type ty = random_type(rng, tysof, {"a", "b"}, 3);
    ctxt = extend(ctxt, NewConst{name, ty}).value();
    decls.emplace_back(name, ty);
  }
  auto instance = [&](const Type& ty) {
    std::map<std::string, Type> s;
    for (const auto& v : oracle_vars(DepNode(ty))) s[v] = random_type(rng, tysof, pick(0, 1) ? std::vector<std::string>{"a"} : std::vector<std::string>{}, 2);
    return oracle_subst(s, ty);
  };
  std::size_t ndefs = pick(1, 3);
  for (std::size_t j = 0; j < ndefs; ++j) {
    const auto& [k, kty] = decls[pick(0, decls.size() - 1)];
    Result<Context> next = Error{Errc::Usage, ""};
    if (pick(0, 1)) {
      next = define_constant(ctxt, "d" + std::to_string(j), mk_const(k, instance(kty)));
    } else {
      Type at = instance(kty);
      next = define_constant(ctxt, k, mk_const("arb", at), true);
    }
    if (next) ctxt = *next;
  }
  return ctxt;
}

}  // namespace holdef::testing
