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
#include <cassert>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace holdef {

//------------------------------------------------------------------------------
// Types

class Type {
 public:
  Type() : Type(app("bool", {})) {}

  static Type var(std::string name) {
    return Type(std::make_shared<const Node>(Node{true, std::move(name), {}}));
  }
  static Type app(std::string name, std::vector<Type> args) {
    return Type(std::make_shared<const Node>(Node{false, std::move(name), std::move(args)}));
  }

  bool is_var() const { return node_->is_var; }
  bool is_app() const { return !node_->is_var; }
  const std::string& name() const { return node_->name; }
  const std::vector<Type>& args() const { return node_->args; }
  std::size_t hash() const { return node_->hash; }

  bool is_bool() const { return is_app() && name() == "bool" && args().empty(); }
  bool is_fun() const { return is_app() && name() == "fun" && args().size() == 2; }
  const Type& dom() const { assert(is_fun()); return args()[0]; }
  const Type& rng() const { assert(is_fun()); return args()[1]; }

  bool is_ground() const {
    if (is_var()) return false;
    return std::all_of(args().begin(), args().end(), [](const Type& a) { return a.is_ground(); });
  }

  friend bool operator==(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash()) return false;
    return (a <=> b) == std::strong_ordering::equal;
  }

  // Variables before applications, then code-point name order, then arguments.
  friend std::strong_ordering operator<=>(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.is_var() != b.is_var()) return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const auto& x = a.args();
    const auto& y = b.args();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      if (auto c = x[i] <=> y[i]; c != 0) return c;
    }
    return x.size() <=> y.size();
  }

 private:
  struct Node {
    bool is_var;
    std::string name;
    std::vector<Type> args;
    std::size_t hash = compute_hash();

    std::size_t compute_hash() const {
      std::size_t h = std::hash<std::string>{}(name) ^ (is_var ? 0x9e3779b97f4a7c15ULL : 0);
      for (const auto& a : args) h = h * 1000003u ^ a.hash();
      return h;
    }
  };
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline Type tyvar(std::string n) { return Type::var(std::move(n)); }
inline Type tyapp(std::string n, std::vector<Type> args) { return Type::app(std::move(n), std::move(args)); }
inline Type bool_ty() { return Type::app("bool", {}); }
inline Type fun_ty(Type d, Type r) { return Type::app("fun", {std::move(d), std::move(r)}); }

inline void collect_tyvars(const Type& ty, std::set<std::string>& out) {
  if (ty.is_var()) {
    out.insert(ty.name());
    return;
  }
  for (const auto& a : ty.args()) collect_tyvars(a, out);
}

/// Distinct type variable names, code-point sorted.
inline std::vector<std::string> tyvars(const Type& ty) {
  std::set<std::string> s;
  collect_tyvars(ty, s);
  return {s.begin(), s.end()};
}

inline std::size_t type_depth(const Type& ty) {
  std::size_t d = 0;
  for (const auto& a : ty.args()) d = std::max(d, type_depth(a));
  return d + 1;
}

//------------------------------------------------------------------------------
// Type substitutions

/// Finite map from type-variable names to types; identity elsewhere.
class TypeSubst {
 public:
  TypeSubst() = default;
  TypeSubst(std::initializer_list<std::pair<const std::string, Type>> init) : map_(init) {}
  explicit TypeSubst(std::map<std::string, Type> m) : map_(std::move(m)) {}

  const Type* find(const std::string& v) const {
    auto it = map_.find(v);
    return it == map_.end() ? nullptr : &it->second;
  }
  void bind(const std::string& v, Type ty) { map_.insert_or_assign(v, std::move(ty)); }
  bool contains(const std::string& v) const { return map_.count(v) != 0; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, Type>& bindings() const { return map_; }

  bool is_ground() const {
    return std::all_of(map_.begin(), map_.end(), [](const auto& kv) { return kv.second.is_ground(); });
  }

  friend bool operator==(const TypeSubst&, const TypeSubst&) = default;

 private:
  std::map<std::string, Type> map_;
};

inline Type apply_subst_type(const TypeSubst& theta, const Type& ty) {
  if (theta.empty()) return ty;
  if (ty.is_var()) {
    const Type* t = theta.find(ty.name());
    return t ? *t : ty;
  }
  if (ty.args().empty()) return ty;
  std::vector<Type> args;
  args.reserve(ty.args().size());
  bool changed = false;
  for (const auto& a : ty.args()) {
    args.push_back(apply_subst_type(theta, a));
    changed = changed || !(args.back() == a);
  }
  return changed ? Type::app(ty.name(), std::move(args)) : ty;
}

namespace detail {

inline bool match_into(const Type& pat, const Type& target, TypeSubst& theta) {
  if (pat.is_var()) {
    if (const Type* bound = theta.find(pat.name())) return *bound == target;
    theta.bind(pat.name(), target);
    return true;
  }
  if (target.is_var() || pat.name() != target.name() || pat.args().size() != target.args().size())
    return false;
  for (std::size_t i = 0; i < pat.args().size(); ++i) {
    if (!match_into(pat.args()[i], target.args()[i], theta)) return false;
  }
  return true;
}

}  // namespace detail

/// First-order matching: Some θ with θ(pattern) = target, dom θ ⊆ tyvars(pattern).
inline std::optional<TypeSubst> match_type(const Type& pattern, const Type& target) {
  TypeSubst theta;
  if (!detail::match_into(pattern, target, theta)) return std::nullopt;
  return theta;
}

inline bool is_instance_of(const Type& general, const Type& specific) {
  return match_type(general, specific).has_value();
}

/// Rename variables of `ty` so none collides with `avoid`. Returns the renaming.
inline TypeSubst rename_apart(const Type& ty, const std::set<std::string>& avoid) {
  std::set<std::string> own;
  collect_tyvars(ty, own);
  std::set<std::string> used = avoid;
  used.insert(own.begin(), own.end());
  TypeSubst ren;
  for (const auto& v : own) {
    if (!avoid.count(v)) continue;
    std::string fresh = v + "'";
    while (used.count(fresh)) fresh += "'";
    used.insert(fresh);
    ren.bind(v, Type::var(fresh));
  }
  return ren;
}

namespace detail {

inline Type resolve(const Type& ty, const std::map<std::string, Type>& sol) {
  if (ty.is_var()) {
    auto it = sol.find(ty.name());
    return it == sol.end() ? ty : resolve(it->second, sol);
  }
  if (ty.args().empty()) return ty;
  std::vector<Type> args;
  for (const auto& a : ty.args()) args.push_back(resolve(a, sol));
  return Type::app(ty.name(), std::move(args));
}

inline bool occurs(const std::string& v, const Type& ty, const std::map<std::string, Type>& sol) {
  if (ty.is_var()) {
    if (ty.name() == v) return true;
    auto it = sol.find(ty.name());
    return it != sol.end() && occurs(v, it->second, sol);
  }
  for (const auto& a : ty.args())
    if (occurs(v, a, sol)) return true;
  return false;
}

inline bool unify_into(const Type& a, const Type& b, std::map<std::string, Type>& sol) {
  Type x = a, y = b;
  while (x.is_var()) {
    auto it = sol.find(x.name());
    if (it == sol.end()) break;
    x = it->second;
  }
  while (y.is_var()) {
    auto it = sol.find(y.name());
    if (it == sol.end()) break;
    y = it->second;
  }
  if (x.is_var() && y.is_var() && x.name() == y.name()) return true;
  if (x.is_var()) {
    if (occurs(x.name(), y, sol)) return false;
    sol.emplace(x.name(), y);
    return true;
  }
  if (y.is_var()) return unify_into(y, x, sol);
  if (x.name() != y.name() || x.args().size() != y.args().size()) return false;
  for (std::size_t i = 0; i < x.args().size(); ++i)
    if (!unify_into(x.args()[i], y.args()[i], sol)) return false;
  return true;
}

}  // namespace detail

/// Syntactic unification with occurs check; variables shared by both sides are
/// treated as the same variable.
inline std::optional<TypeSubst> unify_same_vars(const Type& t1, const Type& t2) {
  std::map<std::string, Type> sol;
  if (!detail::unify_into(t1, t2, sol)) return std::nullopt;
  TypeSubst out;
  for (const auto& [v, ty] : sol) out.bind(v, detail::resolve(ty, sol));
  return out;
}

/// Result of unifying two types whose variables were first renamed apart.
struct Unifier {
  TypeSubst renaming;  // applied to the second type before unification
  TypeSubst mgu;       // over tyvars(t1) ∪ tyvars(renaming(t2))
  Type common;         // the most general common instance
};

inline std::optional<Unifier> unify_apart(const Type& t1, const Type& t2) {
  std::set<std::string> avoid;
  collect_tyvars(t1, avoid);
  TypeSubst ren = rename_apart(t2, avoid);
  Type t2r = apply_subst_type(ren, t2);
  auto mgu = unify_same_vars(t1, t2r);
  if (!mgu) return std::nullopt;
  Type common = apply_subst_type(*mgu, t1);
  return Unifier{std::move(ren), std::move(*mgu), std::move(common)};
}

/// Some θ iff t1 and t2 have a common instance. θ acts on t1 and on t2 after
/// its variables are renamed apart (see unify_apart for the renaming).
inline std::optional<TypeSubst> unify_types(const Type& t1, const Type& t2) {
  auto u = unify_apart(t1, t2);
  if (!u) return std::nullopt;
  return u->mgu;
}

inline bool orthogonal_type(const Type& t1, const Type& t2) { return !unify_types(t1, t2).has_value(); }

//------------------------------------------------------------------------------
// Constant instances

struct ConstInstance {
  std::string name;
  Type ty;

  friend bool operator==(const ConstInstance&, const ConstInstance&) = default;
  friend std::strong_ordering operator<=>(const ConstInstance& a, const ConstInstance& b) {
    if (int c = a.name.compare(b.name); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.ty <=> b.ty;
  }
};

inline bool orthogonal_const(const ConstInstance& c1, const ConstInstance& c2) {
  return c1.name != c2.name || orthogonal_type(c1.ty, c2.ty);
}

//------------------------------------------------------------------------------
// Terms

enum class TermKind { Var, Const, Comb, Abs };

class Term {
 public:
  Term() : Term(var("_", bool_ty())) {}

  static Term var(std::string name, Type ty) {
    return Term(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), std::move(ty), {}, {}}));
  }
  static Term constant(std::string name, Type ty) {
    return Term(std::make_shared<const Node>(Node{TermKind::Const, std::move(name), std::move(ty), {}, {}}));
  }
  static Term comb(Term f, Term x) {
    return Term(std::make_shared<const Node>(Node{TermKind::Comb, {}, {}, std::move(f.node_), std::move(x.node_)}));
  }
  /// `binder` must be a Var; the checker rejects other shapes.
  static Term abs(Term binder, Term body) {
    return Term(std::make_shared<const Node>(Node{TermKind::Abs, {}, {}, std::move(binder.node_), std::move(body.node_)}));
  }

  TermKind kind() const { return node_->kind; }
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_const() const { return kind() == TermKind::Const; }
  bool is_comb() const { return kind() == TermKind::Comb; }
  bool is_abs() const { return kind() == TermKind::Abs; }

  // Var / Const
  const std::string& name() const { return node_->name; }
  const Type& type() const { return node_->ty; }
  // Comb
  Term rator() const { assert(is_comb()); return Term(node_->a); }
  Term rand() const { assert(is_comb()); return Term(node_->b); }
  // Abs
  Term binder() const { assert(is_abs()); return Term(node_->a); }
  Term body() const { assert(is_abs()); return Term(node_->b); }

  bool same_node(const Term& o) const { return node_ == o.node_; }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// Structural order: constructor tag, then fields lexicographically.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.kind() != b.kind()) return static_cast<int>(a.kind()) <=> static_cast<int>(b.kind());
    switch (a.kind()) {
      case TermKind::Var:
      case TermKind::Const:
        if (int c = a.name().compare(b.name()); c != 0)
          return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.type() <=> b.type();
      case TermKind::Comb:
        if (auto c = a.rator() <=> b.rator(); c != 0) return c;
        return a.rand() <=> b.rand();
      case TermKind::Abs:
        if (auto c = a.binder() <=> b.binder(); c != 0) return c;
        return a.body() <=> b.body();
    }
    return std::strong_ordering::equal;
  }

 private:
  struct Node {
    TermKind kind;
    std::string name;
    Type ty;
    std::shared_ptr<const Node> a, b;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline Term mk_var(std::string n, Type ty) { return Term::var(std::move(n), std::move(ty)); }
inline Term mk_const(std::string n, Type ty) { return Term::constant(std::move(n), std::move(ty)); }
inline Term mk_comb(Term f, Term x) { return Term::comb(std::move(f), std::move(x)); }
inline Term mk_abs(Term v, Term body) { return Term::abs(std::move(v), std::move(body)); }

inline Type equality_type(const Type& ty) { return fun_ty(ty, fun_ty(ty, bool_ty())); }
inline Term mk_equal(const Type& ty) { return mk_const("=", equality_type(ty)); }

inline bool is_equal_const(const Term& t) {
  if (!t.is_const() || t.name() != "=") return false;
  const Type& ty = t.type();
  return ty.is_fun() && ty.rng().is_fun() && ty.rng().dom() == ty.dom() && ty.rng().rng().is_bool();
}

/// Well-formed: every Abs binder is a Var.
inline bool well_formed(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const: return true;
    case TermKind::Comb: return well_formed(t.rator()) && well_formed(t.rand());
    case TermKind::Abs: return t.binder().is_var() && well_formed(t.body());
  }
  return false;
}

/// Type of a well-typed term; nullopt when ill-typed.
inline std::optional<Type> type_of(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const: return t.type();
    case TermKind::Comb: {
      auto f = type_of(t.rator());
      if (!f || !f->is_fun()) return std::nullopt;
      auto x = type_of(t.rand());
      if (!x || !(*x == f->dom())) return std::nullopt;
      return f->rng();
    }
    case TermKind::Abs: {
      if (!t.binder().is_var()) return std::nullopt;
      auto b = type_of(t.body());
      if (!b) return std::nullopt;
      return fun_ty(t.binder().type(), *b);
    }
  }
  return std::nullopt;
}

inline bool welltyped(const Term& t) { return type_of(t).has_value(); }

inline bool has_type(const Term& t, const Type& ty) {
  auto got = type_of(t);
  return got && *got == ty;
}

/// s === t; the caller ensures s is well-typed.
inline Term mk_eq(const Term& s, const Term& t) {
  auto ty = type_of(s);
  assert(ty);
  return mk_comb(mk_comb(mk_equal(*ty), s), t);
}

inline bool is_eq(const Term& t) {
  return t.is_comb() && t.rator().is_comb() && is_equal_const(t.rator().rator());
}
inline Term eq_lhs(const Term& t) { return t.rator().rand(); }
inline Term eq_rhs(const Term& t) { return t.rand(); }

//------------------------------------------------------------------------------
// Variables

inline void collect_tvars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const: collect_tyvars(t.type(), out); return;
    case TermKind::Comb: collect_tvars(t.rator(), out); collect_tvars(t.rand(), out); return;
    case TermKind::Abs: collect_tvars(t.binder(), out); collect_tvars(t.body(), out); return;
  }
}

/// Type variables occurring anywhere in a term, code-point sorted, distinct.
inline std::vector<std::string> tvars(const Term& t) {
  std::set<std::string> s;
  collect_tvars(t, s);
  return {s.begin(), s.end()};
}

namespace detail {
inline void collect_frees(const Term& t, std::vector<Term>& bound, std::set<Term>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (std::find(bound.begin(), bound.end(), t) == bound.end()) out.insert(t);
      return;
    case TermKind::Const: return;
    case TermKind::Comb:
      collect_frees(t.rator(), bound, out);
      collect_frees(t.rand(), bound, out);
      return;
    case TermKind::Abs:
      bound.push_back(t.binder());
      collect_frees(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}
}  // namespace detail

/// Free term variables (name and type), sorted and distinct.
inline std::set<Term> frees(const Term& t) {
  std::vector<Term> bound;
  std::set<Term> out;
  detail::collect_frees(t, bound, out);
  return out;
}

inline bool vfree_in(const Term& v, const Term& t) { return frees(t).count(v) != 0; }
inline bool closed(const Term& t) { return frees(t).empty(); }

inline Term variant(const std::set<Term>& avoid, const Term& v) {
  Term cand = v;
  while (avoid.count(cand)) cand = mk_var(cand.name() + "'", v.type());
  return cand;
}

/// Capture-avoiding substitution of terms for free variables.
using TermSubst = std::vector<std::pair<Term, Term>>;  // (Var, replacement)

inline Term vsubst(const TermSubst& theta, const Term& t) {
  if (theta.empty()) return t;
  switch (t.kind()) {
    case TermKind::Var:
      for (const auto& [v, r] : theta)
        if (v == t) return r;
      return t;
    case TermKind::Const: return t;
    case TermKind::Comb: {
      Term f = vsubst(theta, t.rator());
      Term x = vsubst(theta, t.rand());
      if (f.same_node(t.rator()) && x.same_node(t.rand())) return t;
      return mk_comb(f, x);
    }
    case TermKind::Abs: {
      const Term v = t.binder();
      const Term body = t.body();
      auto body_frees = frees(body);
      TermSubst inner;
      for (const auto& p : theta)
        if (!(p.first == v) && body_frees.count(p.first)) inner.push_back(p);
      if (inner.empty()) return t;
      bool capture = false;
      std::set<Term> range_frees;
      for (const auto& [w, r] : inner) {
        auto fr = frees(r);
        if (fr.count(v)) capture = true;
        range_frees.insert(fr.begin(), fr.end());
      }
      if (!capture) return mk_abs(v, vsubst(inner, body));
      std::set<Term> avoid = range_frees;
      avoid.insert(body_frees.begin(), body_frees.end());
      Term v2 = variant(avoid, v);
      inner.emplace_back(v, v2);
      return mk_abs(v2, vsubst(inner, body));
    }
  }
  return t;
}

/// Type instantiation of a term, renaming binders that would capture.
inline Term apply_subst_term(const TypeSubst& theta, const Term& t) {
  if (theta.empty()) return t;
  switch (t.kind()) {
    case TermKind::Var: return mk_var(t.name(), apply_subst_type(theta, t.type()));
    case TermKind::Const: return mk_const(t.name(), apply_subst_type(theta, t.type()));
    case TermKind::Comb: return mk_comb(apply_subst_term(theta, t.rator()), apply_subst_term(theta, t.rand()));
    case TermKind::Abs: {
      Term v = t.binder();
      Term body = t.body();
      Term v_inst = mk_var(v.name(), apply_subst_type(theta, v.type()));
      auto body_frees = frees(body);
      bool clash = false;
      for (const auto& w : body_frees) {
        if (w == v) continue;
        if (w.name() == v.name() && apply_subst_type(theta, w.type()) == v_inst.type()) clash = true;
      }
      if (clash) {
        std::set<std::string> names;
        for (const auto& w : body_frees) names.insert(w.name());
        std::string fresh = v.name() + "'";
        while (names.count(fresh)) fresh += "'";
        Term v2 = mk_var(fresh, v.type());
        body = vsubst({{v, v2}}, body);
        v_inst = mk_var(fresh, apply_subst_type(theta, v.type()));
      }
      return mk_abs(v_inst, apply_subst_term(theta, body));
    }
  }
  return t;
}

//------------------------------------------------------------------------------
// Alpha equivalence and the canonical term order

namespace detail {

inline int bound_index(const std::vector<Term>& env, const Term& v) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
    if (env[static_cast<std::size_t>(i)] == v) return static_cast<int>(env.size()) - 1 - i;
  return -1;
}

inline std::strong_ordering alpha_cmp(const Term& a, const Term& b, std::vector<Term>& ea, std::vector<Term>& eb) {
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) <=> static_cast<int>(b.kind());
  switch (a.kind()) {
    case TermKind::Var: {
      int ia = bound_index(ea, a), ib = bound_index(eb, b);
      if (ia >= 0 || ib >= 0) {
        if (ia < 0) return std::strong_ordering::greater;
        if (ib < 0) return std::strong_ordering::less;
        return ia <=> ib;
      }
      return a <=> b;
    }
    case TermKind::Const: return a <=> b;
    case TermKind::Comb:
      if (auto c = alpha_cmp(a.rator(), b.rator(), ea, eb); c != 0) return c;
      return alpha_cmp(a.rand(), b.rand(), ea, eb);
    case TermKind::Abs: {
      if (auto c = a.binder().type() <=> b.binder().type(); c != 0) return c;
      ea.push_back(a.binder());
      eb.push_back(b.binder());
      auto c = alpha_cmp(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return c;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Total order modulo renaming of bound variables.
inline std::strong_ordering alpha_order(const Term& a, const Term& b) {
  std::vector<Term> ea, eb;
  return detail::alpha_cmp(a, b, ea, eb);
}

inline bool alpha_equiv(const Term& a, const Term& b) { return alpha_order(a, b) == std::strong_ordering::equal; }

struct AlphaLess {
  bool operator()(const Term& a, const Term& b) const { return alpha_order(a, b) < 0; }
};

//------------------------------------------------------------------------------
// Non-built-in extraction

inline void types_nonbuiltin_into(const Type& ty, std::vector<Type>& out) {
  if (ty.is_bool()) return;
  if (ty.is_fun()) {
    types_nonbuiltin_into(ty.dom(), out);
    types_nonbuiltin_into(ty.rng(), out);
    return;
  }
  out.push_back(ty);
}

/// Outermost non-built-in types, left to right, duplicates kept.
inline std::vector<Type> types_nonbuiltin(const Type& ty) {
  std::vector<Type> out;
  types_nonbuiltin_into(ty, out);
  return out;
}

inline void term_types_nonbuiltin_into(const Term& t, std::vector<Type>& out) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const: types_nonbuiltin_into(t.type(), out); return;
    case TermKind::Comb:
      term_types_nonbuiltin_into(t.rator(), out);
      term_types_nonbuiltin_into(t.rand(), out);
      return;
    case TermKind::Abs:
      term_types_nonbuiltin_into(t.binder(), out);
      term_types_nonbuiltin_into(t.body(), out);
      return;
  }
}

inline std::vector<Type> term_types_nonbuiltin(const Term& t) {
  std::vector<Type> out;
  term_types_nonbuiltin_into(t, out);
  return out;
}

inline void consts_nonbuiltin_into(const Term& t, std::vector<ConstInstance>& out) {
  switch (t.kind()) {
    case TermKind::Var: return;
    case TermKind::Const:
      if (!is_equal_const(t)) out.push_back({t.name(), t.type()});
      return;
    case TermKind::Comb:
      consts_nonbuiltin_into(t.rator(), out);
      consts_nonbuiltin_into(t.rand(), out);
      return;
    case TermKind::Abs: consts_nonbuiltin_into(t.body(), out); return;
  }
}

inline std::vector<ConstInstance> consts_nonbuiltin(const Term& t) {
  std::vector<ConstInstance> out;
  consts_nonbuiltin_into(t, out);
  return out;
}

/// Membership in the closure of `base` under Bool and function types.
inline bool builtin_closure_member(const std::function<bool(const Type&)>& base, const Type& ty) {
  if (ty.is_bool()) return true;
  if (base(ty)) return true;
  if (ty.is_fun()) return builtin_closure_member(base, ty.dom()) && builtin_closure_member(base, ty.rng());
  return false;
}

inline bool builtin_closure_member(const std::vector<Type>& base, const Type& ty) {
  return builtin_closure_member([&](const Type& t) { return std::find(base.begin(), base.end(), t) != base.end(); }, ty);
}

inline bool is_builtin_type(const Type& ty) { return ty.is_bool() || ty.is_fun(); }

}  // namespace holdef

template <>
struct std::hash<holdef::Type> {
  std::size_t operator()(const holdef::Type& t) const noexcept { return t.hash(); }
};
