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

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "holdef/print.hpp"
#include "holdef/result.hpp"
#include "holdef/syntax.hpp"
#include "holdef/theory.hpp"

namespace holdef {

struct DepEdge {
  DepNode src;
  DepNode dst;
  int rule;  // 1: definition, 2: constant to its types, 3: type to its arguments

  friend bool operator==(const DepEdge&, const DepEdge&) = default;
  friend std::strong_ordering operator<=>(const DepEdge& a, const DepEdge& b) {
    if (auto c = a.src <=> b.src; c != 0) return c;
    if (auto c = a.dst <=> b.dst; c != 0) return c;
    return a.rule <=> b.rule;
  }
};

namespace detail {

inline void add_body_edges(const DepNode& u, const Term& body, std::set<DepEdge>& out) {
  for (auto& ty : term_types_nonbuiltin(body)) out.insert({u, DepNode(ty), 1});
  for (auto& c : consts_nonbuiltin(body)) out.insert({u, DepNode(c), 1});
}

}  // namespace detail

/// The schematic dependency edges of a context, sorted and distinct.
inline std::vector<DepEdge> dep_edges(const Context& ctxt) {
  std::set<DepEdge> out;
  for (const auto& upd : ctxt.updates()) {
    if (const auto* td = std::get_if<TypeDefn>(&upd)) {
      if (auto sh = typedefn_shape(*td)) detail::add_body_edges(DepNode(sh->abs_type), td->pred, out);
    } else if (const auto* cs = std::get_if<ConstSpec>(&upd)) {
      for (const auto& [s, t] : cs->eqs) {
        if (auto ty = type_of(t)) detail::add_body_edges(DepNode(ConstInstance{s, *ty}), t, out);
      }
    }
  }
  for (const auto& [c, ty] : ctxt.sig().tmsof) {
    if (c == "=") continue;
    for (auto& v : types_nonbuiltin(ty)) out.insert({DepNode(ConstInstance{c, ty}), DepNode(v), 2});
  }
  for (const auto& [k, arity] : ctxt.sig().tysof) {
    std::vector<Type> args;
    for (auto& v : newtype_vars(arity)) args.push_back(tyvar(v));
    Type u = tyapp(k, args);
    for (auto& a : args) out.insert({DepNode(u), DepNode(a), 3});
  }
  return {out.begin(), out.end()};
}

inline std::optional<TypeSubst> match_edge(const DepEdge& e, const DepNode& n) { return match_node(e.src, n); }

/// Every m with n related to m by one instantiated schematic edge.
inline std::vector<DepNode> dep_step_instances(const std::vector<DepEdge>& edges, const DepNode& n) {
  std::set<DepNode> out;
  for (const auto& e : edges)
    if (auto theta = match_edge(e, n)) out.insert(apply_subst_node(*theta, e.dst));
  return {out.begin(), out.end()};
}

inline std::vector<DepNode> dep_step_instances(const Context& ctxt, const DepNode& n) {
  return dep_step_instances(dep_edges(ctxt), n);
}

//------------------------------------------------------------------------------
// Termination of the substitutive closure

struct Terminating {
  std::size_t expanded = 0;     // narrowing steps taken
  std::size_t start_nodes = 0;  // schematic edge sources searched from
  std::size_t pruned = 0;       // revisits shown to shrink
};
struct Cycle {
  std::vector<DepNode> path;  // consecutive nodes related; the last is an instance of the first
};
struct Unknown {
  std::size_t bound = 0;
  std::string reason;
};
using TerminationVerdict = std::variant<Terminating, Cycle, Unknown>;

inline const char* verdict_name(const TerminationVerdict& v) {
  if (std::holds_alternative<Terminating>(v)) return "terminating";
  if (std::holds_alternative<Cycle>(v)) return "cycle";
  return "unknown";
}

namespace detail {

inline std::optional<TypeSubst> unify_nodes(const DepNode& a, const DepNode& b) {
  if (a.is_type() != b.is_type()) return std::nullopt;
  if (a.is_const() && a.constant().name != b.constant().name) return std::nullopt;
  return unify_same_vars(a.carried_type(), b.carried_type());
}

inline void type_measure(const Type& ty, std::size_t& size, std::map<std::string, std::size_t>& occ) {
  if (ty.is_var()) {
    ++occ[ty.name()];
    return;
  }
  ++size;
  for (const auto& a : ty.args()) type_measure(a, size, occ);
}

/// True when every instance of `later` is strictly smaller than the same
/// instance of `earlier`, so iterating the segment cannot go on forever.
inline bool shrinks(const DepNode& earlier, const DepNode& later) {
  std::size_t se = 0, sl = 0;
  std::map<std::string, std::size_t> oe, ol;
  type_measure(earlier.carried_type(), se, oe);
  type_measure(later.carried_type(), sl, ol);
  for (const auto& [v, n] : ol)
    if (n > oe[v]) return false;
  std::size_t ve = 0, vl = 0;
  for (const auto& [v, n] : oe) ve += n;
  for (const auto& [v, n] : ol) vl += n;
  return sl + vl < se + ve;
}

/// Renames type variables to a, b, c, ... in order of first occurrence.
inline std::vector<DepNode> tidy_path(const std::vector<DepNode>& path) {
  std::vector<std::string> order;
  for (const auto& n : path) {
    std::vector<Type> stack{n.carried_type()};
    while (!stack.empty()) {
      Type t = stack.back();
      stack.pop_back();
      if (t.is_var()) {
        if (std::find(order.begin(), order.end(), t.name()) == order.end()) order.push_back(t.name());
        continue;
      }
      for (auto it = t.args().rbegin(); it != t.args().rend(); ++it) stack.push_back(*it);
    }
  }
  TypeSubst theta;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::string name = i < 26 ? std::string(1, static_cast<char>('a' + i)) : "t" + std::to_string(i);
    theta.bind(order[i], tyvar(name));
  }
  std::vector<DepNode> out;
  for (const auto& n : path) out.push_back(apply_subst_node(theta, n));
  return out;
}

class TerminationSearch {
 public:
  TerminationSearch(std::vector<DepEdge> edges, std::size_t bound) : edges_(std::move(edges)), bound_(bound) {}

  TerminationVerdict run() {
    std::set<DepNode> starts;
    for (const auto& e : edges_) starts.insert(e.src);
    for (const auto& s : starts) {
      if (subsumed(s)) continue;
      ++stats_.start_nodes;
      std::vector<DepNode> expanded{s}, real{s};
      if (auto v = dfs(expanded, real)) return *v;
      finished_.push_back(s);
    }
    if (undecided_) return Unknown{bound_, undecided_reason_};
    return stats_;
  }

 private:
  bool subsumed(const DepNode& n) const {
    return std::any_of(finished_.begin(), finished_.end(), [&](const DepNode& f) { return node_instance_of(f, n); });
  }

  DepEdge fresh(const DepEdge& e) {
    std::set<std::string> vs;
    collect_tyvars(e.src.carried_type(), vs);
    collect_tyvars(e.dst.carried_type(), vs);
    TypeSubst theta;
    std::string suffix = "'" + std::to_string(counter_++);
    for (const auto& v : vs) theta.bind(v, tyvar(v + suffix));
    return {apply_subst_node(theta, e.src), apply_subst_node(theta, e.dst), e.rule};
  }

  // `expanded` holds each path node as it was when expanded; `real` holds the
  // same path specialised by every later unifier, so consecutive real nodes
  // are related by the substitutive closure.
  std::optional<TerminationVerdict> dfs(std::vector<DepNode>& expanded, std::vector<DepNode>& real) {
    const DepNode node = expanded.back();
    for (const auto& e0 : edges_) {
      if (e0.src.is_type() != node.is_type()) continue;
      if (node.is_const() && node.constant().name != e0.src.constant().name) continue;
      DepEdge e = fresh(e0);
      auto u = unify_same_vars(node.carried_type(), e.src.carried_type());
      if (!u) continue;
      if (++stats_.expanded > bound_) return Unknown{bound_, "expansion bound reached"};
      const TypeSubst& sigma = *u;
      DepNode next = apply_subst_node(sigma, e.dst);
      std::vector<DepNode> real2;
      for (const auto& r : real) real2.push_back(apply_subst_node(sigma, r));
      real2.push_back(next);

      for (std::size_t j = 0; j + 1 < real2.size(); ++j) {
        if (node_instance_of(real2[j], next))
          return Cycle{tidy_path({real2.begin() + static_cast<std::ptrdiff_t>(j), real2.end()})};
        if (auto tau = unify_nodes(real2[j], next)) {
          std::vector<DepNode> path;
          for (std::size_t i = j; i < real2.size(); ++i) path.push_back(apply_subst_node(*tau, real2[i]));
          return Cycle{tidy_path(path)};
        }
      }
      if (subsumed(next)) continue;
      bool revisit = false;
      for (std::size_t j = 0; j < expanded.size(); ++j) {
        if (!node_instance_of(expanded[j], next)) continue;
        revisit = true;
        if (shrinks(real2[j], next)) {
          ++stats_.pruned;
        } else if (!undecided_) {
          undecided_ = true;
          undecided_reason_ = "revisit of " + to_string(real2[j]) + " at " + to_string(next) + " neither cycles nor shrinks";
        }
        break;
      }
      if (revisit) continue;

      expanded.push_back(next);
      std::swap(real, real2);
      auto v = dfs(expanded, real);
      std::swap(real, real2);
      expanded.pop_back();
      if (v) return v;
      finished_.push_back(next);
    }
    return std::nullopt;
  }

  std::vector<DepEdge> edges_;
  std::size_t bound_;
  std::size_t counter_ = 0;
  std::vector<DepNode> finished_;
  Terminating stats_;
  bool undecided_ = false;
  std::string undecided_reason_;
};

}  // namespace detail

inline constexpr std::size_t kDefaultTerminationBound = 1000;

/// Bounded narrowing search over the substitutive closure. Cycle paths are
/// certificates; Terminating holds when every branch dies out or provably
/// shrinks; anything else is Unknown.
inline TerminationVerdict check_termination(const std::vector<DepEdge>& edges,
                                            std::size_t bound = kDefaultTerminationBound) {
  return detail::TerminationSearch(edges, bound).run();
}

inline TerminationVerdict check_termination(const Context& ctxt, std::size_t bound = kDefaultTerminationBound) {
  return check_termination(dep_edges(ctxt), bound);
}

/// Replays a cycle: each step is one instantiated edge, and the last node is
/// an instance of the first.
inline bool cycle_replays(const std::vector<DepEdge>& edges, const std::vector<DepNode>& path) {
  if (path.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto succ = dep_step_instances(edges, path[i]);
    if (std::find(succ.begin(), succ.end(), path[i + 1]) == succ.end()) return false;
  }
  return node_instance_of(path.front(), path.back());
}

//------------------------------------------------------------------------------
// Orthogonality

/// Symbols given a definition (not merely declared) by the context.
inline std::vector<DepNode> defined_nodes(const Context& ctxt) {
  std::vector<DepNode> out;
  for (const auto& upd : ctxt.updates()) {
    if (const auto* td = std::get_if<TypeDefn>(&upd)) {
      auto sh = typedefn_shape(*td);
      if (!sh) continue;
      out.emplace_back(sh->abs_type);
      out.emplace_back(ConstInstance{td->abs, fun_ty(sh->rep_type, sh->abs_type)});
      out.emplace_back(ConstInstance{td->rep, fun_ty(sh->abs_type, sh->rep_type)});
    } else if (const auto* cs = std::get_if<ConstSpec>(&upd)) {
      for (auto& n : upd_introduces(upd)) out.push_back(n);
      (void)cs;
    }
  }
  return out;
}

/// Pairwise orthogonality of defined symbols.
inline Status context_orthogonal(const Context& ctxt) {
  auto defs = defined_nodes(ctxt);
  for (std::size_t i = 0; i < defs.size(); ++i) {
    for (std::size_t j = i + 1; j < defs.size(); ++j) {
      const DepNode &a = defs[i], &b = defs[j];
      if (a.is_type() != b.is_type()) continue;
      if (a.is_const() && a.constant().name != b.constant().name) continue;
      if (a.is_type() && a.type().name() != b.type().name()) continue;
      auto u = unify_apart(a.carried_type(), b.carried_type());
      if (!u) continue;
      return Error{Errc::Orthogonality, "overlapping definitions " + to_string(a) + " and " + to_string(b) +
                                            " share instance " + to_string(u->common)};
    }
  }
  return ok_status();
}

/// Orthogonal and certified terminating.
inline Status wellformed(const Context& ctxt, std::size_t bound = kDefaultTerminationBound) {
  if (auto s = context_orthogonal(ctxt); !s) return s;
  auto v = check_termination(ctxt, bound);
  if (const auto* c = std::get_if<Cycle>(&v)) {
    std::string p;
    for (const auto& n : c->path) p += (p.empty() ? "" : " -> ") + to_string(n);
    return Error{Errc::DependencyCycle, "dependency cycle: " + p};
  }
  if (const auto* u = std::get_if<Unknown>(&v))
    return Error{Errc::TerminationUnknown, "termination not established: " + u->reason};
  return ok_status();
}

}  // namespace holdef
