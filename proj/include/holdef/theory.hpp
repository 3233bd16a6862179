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

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "holdef/syntax.hpp"

namespace holdef {

struct Signature {
  std::map<std::string, std::size_t> tysof;  // type constructor -> arity
  std::map<std::string, Type> tmsof;         // constant -> schematic type

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Theory {
  Signature sig;
  std::vector<Term> axioms;

  bool has_axiom(const Term& p) const {
    for (const auto& a : axioms)
      if (alpha_equiv(a, p)) return true;
    return false;
  }
};

//------------------------------------------------------------------------------
// Updates

struct NewAxiom {
  Term prop;
};
struct NewType {
  std::string name;
  std::size_t arity;
};
struct NewConst {
  std::string name;
  Type ty;
};
struct TypeDefn {
  std::string name;
  Term pred;
  std::string abs;
  std::string rep;
};
struct ConstSpec {
  bool overload;
  std::vector<std::pair<std::string, Term>> eqs;
  Term prop;
};

using Update = std::variant<NewAxiom, NewType, NewConst, TypeDefn, ConstSpec>;

inline const char* update_kind(const Update& u) {
  static constexpr const char* names[] = {"NewAxiom", "NewType", "NewConst", "TypeDefn", "ConstSpec"};
  return names[u.index()];
}

inline bool is_definition(const Update& u) {
  return std::holds_alternative<TypeDefn>(u) || std::holds_alternative<ConstSpec>(u);
}

//------------------------------------------------------------------------------
// Dependency nodes: type + term

class DepNode {
 public:
  DepNode(Type ty) : v_(std::move(ty)) {}
  DepNode(ConstInstance c) : v_(std::move(c)) {}

  bool is_type() const { return v_.index() == 0; }
  bool is_const() const { return v_.index() == 1; }
  const Type& type() const { return std::get<0>(v_); }
  const ConstInstance& constant() const { return std::get<1>(v_); }
  /// The type carried by the node (the constant's type for constants).
  const Type& carried_type() const { return is_type() ? type() : constant().ty; }

  bool is_ground() const { return carried_type().is_ground(); }

  friend bool operator==(const DepNode&, const DepNode&) = default;
  friend std::strong_ordering operator<=>(const DepNode& a, const DepNode& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
    if (a.is_type()) return a.type() <=> b.type();
    return a.constant() <=> b.constant();
  }

 private:
  std::variant<Type, ConstInstance> v_;
};

inline DepNode apply_subst_node(const TypeSubst& theta, const DepNode& n) {
  if (n.is_type()) return DepNode(apply_subst_type(theta, n.type()));
  return DepNode(ConstInstance{n.constant().name, apply_subst_type(theta, n.constant().ty)});
}

/// Some θ with θ(general) = specific.
inline std::optional<TypeSubst> match_node(const DepNode& general, const DepNode& specific) {
  if (general.is_type() != specific.is_type()) return std::nullopt;
  if (general.is_const() && general.constant().name != specific.constant().name) return std::nullopt;
  return match_type(general.carried_type(), specific.carried_type());
}

inline bool node_instance_of(const DepNode& general, const DepNode& specific) {
  return match_node(general, specific).has_value();
}

//------------------------------------------------------------------------------
// Well-formedness

inline bool type_ok(const std::map<std::string, std::size_t>& tys, const Type& ty) {
  if (ty.is_var()) return true;
  auto it = tys.find(ty.name());
  if (it == tys.end() || it->second != ty.args().size()) return false;
  for (const auto& a : ty.args())
    if (!type_ok(tys, a)) return false;
  return true;
}

namespace detail {
inline bool term_symbols_ok(const Signature& sig, const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return type_ok(sig.tysof, t.type());
    case TermKind::Const: {
      if (!type_ok(sig.tysof, t.type())) return false;
      auto it = sig.tmsof.find(t.name());
      return it != sig.tmsof.end() && is_instance_of(it->second, t.type());
    }
    case TermKind::Comb: return term_symbols_ok(sig, t.rator()) && term_symbols_ok(sig, t.rand());
    case TermKind::Abs: return term_symbols_ok(sig, t.binder()) && term_symbols_ok(sig, t.body());
  }
  return false;
}
}  // namespace detail

inline bool term_ok(const Signature& sig, const Term& t) {
  return well_formed(t) && welltyped(t) && detail::term_symbols_ok(sig, t);
}

inline bool builtins_present(const Signature& sig) {
  auto b = sig.tysof.find("bool");
  auto f = sig.tysof.find("fun");
  auto e = sig.tmsof.find("=");
  return b != sig.tysof.end() && b->second == 0 && f != sig.tysof.end() && f->second == 2 &&
         e != sig.tmsof.end() && e->second == equality_type(tyvar("a"));
}

inline bool theory_ok(const Theory& thy) {
  if (!builtins_present(thy.sig)) return false;
  for (const auto& [name, ty] : thy.sig.tmsof)
    if (!type_ok(thy.sig.tysof, ty)) return false;
  for (const auto& p : thy.axioms)
    if (!has_type(p, bool_ty()) || !term_ok(thy.sig, p)) return false;
  return true;
}

//------------------------------------------------------------------------------
// What an update adds

inline std::vector<std::string> newtype_vars(std::size_t arity) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arity; ++i) out.emplace_back(i + 1, 'a');
  return out;
}

struct TypeDefnShape {
  Type rep_type;  // the host type σ, with pred : σ -> bool
  Type abs_type;  // the new type over the predicate's sorted type variables
};

/// nullopt when the predicate is not of shape σ -> bool.
inline std::optional<TypeDefnShape> typedefn_shape(const TypeDefn& td) {
  auto pty = type_of(td.pred);
  if (!pty || !pty->is_fun() || !pty->rng().is_bool()) return std::nullopt;
  std::vector<Type> args;
  for (const auto& v : tvars(td.pred)) args.push_back(tyvar(v));
  return TypeDefnShape{pty->dom(), tyapp(td.name, std::move(args))};
}

inline std::vector<DepNode> upd_introduces(const Update& upd) {
  return std::visit(
      [](const auto& u) -> std::vector<DepNode> {
        using U = std::decay_t<decltype(u)>;
        if constexpr (std::is_same_v<U, NewAxiom>) {
          return {};
        } else if constexpr (std::is_same_v<U, NewType>) {
          std::vector<Type> args;
          for (auto& v : newtype_vars(u.arity)) args.push_back(tyvar(v));
          return {DepNode(tyapp(u.name, std::move(args)))};
        } else if constexpr (std::is_same_v<U, NewConst>) {
          return {DepNode(ConstInstance{u.name, u.ty})};
        } else if constexpr (std::is_same_v<U, TypeDefn>) {
          std::vector<Type> args;
          for (auto& v : tvars(u.pred)) args.push_back(tyvar(v));
          return {DepNode(tyapp(u.name, std::move(args)))};
        } else {
          std::vector<DepNode> out;
          for (const auto& [s, t] : u.eqs) {
            auto ty = type_of(t);
            out.emplace_back(ConstInstance{s, ty ? *ty : bool_ty()});
          }
          return out;
        }
      },
      upd);
}

/// ConstSpec axiom: prop with each placeholder variable replaced by its constant.
inline Term constspec_axiom(const ConstSpec& cs) {
  TermSubst theta;
  for (const auto& [s, t] : cs.eqs) {
    Type ty = type_of(t).value_or(bool_ty());
    theta.emplace_back(mk_var(s, ty), mk_const(s, ty));
  }
  return vsubst(theta, cs.prop);
}

/// The two characteristic axioms of a type definition.
inline std::vector<Term> typedefn_axioms(const TypeDefn& td, const TypeDefnShape& sh) {
  Term abs = mk_const(td.abs, fun_ty(sh.rep_type, sh.abs_type));
  Term rep = mk_const(td.rep, fun_ty(sh.abs_type, sh.rep_type));
  Term a = mk_var("a", sh.abs_type);
  Term r = mk_var("r", sh.rep_type);
  return {mk_eq(mk_comb(abs, mk_comb(rep, a)), a),
          mk_eq(mk_comb(td.pred, r), mk_eq(mk_comb(rep, mk_comb(abs, r)), r))};
}

inline void apply_update(const Update& upd, Theory& thy) {
  std::visit(
      [&](const auto& u) {
        using U = std::decay_t<decltype(u)>;
        if constexpr (std::is_same_v<U, NewAxiom>) {
          thy.axioms.push_back(u.prop);
        } else if constexpr (std::is_same_v<U, NewType>) {
          thy.sig.tysof[u.name] = u.arity;
        } else if constexpr (std::is_same_v<U, NewConst>) {
          thy.sig.tmsof[u.name] = u.ty;
        } else if constexpr (std::is_same_v<U, TypeDefn>) {
          auto sh = typedefn_shape(u);
          if (!sh) return;
          thy.sig.tysof[u.name] = sh->abs_type.args().size();
          thy.sig.tmsof[u.abs] = fun_ty(sh->rep_type, sh->abs_type);
          thy.sig.tmsof[u.rep] = fun_ty(sh->abs_type, sh->rep_type);
          for (auto& ax : typedefn_axioms(u, *sh)) thy.axioms.push_back(std::move(ax));
        } else {
          if (!u.overload) {
            for (const auto& [s, t] : u.eqs) thy.sig.tmsof[s] = type_of(t).value_or(bool_ty());
          }
          thy.axioms.push_back(constspec_axiom(u));
        }
      },
      upd);
}

//------------------------------------------------------------------------------
// Contexts

/// A list of updates together with its theory. Updates are kept in
/// chronological order (oldest first); `newest()` is the head of the list.
class Context {
 public:
  const std::vector<Update>& updates() const { return data_->updates; }
  std::size_t size() const { return data_->updates.size(); }
  const Update& newest() const { return data_->updates.back(); }
  const Theory& thy() const { return data_->thy; }
  const Signature& sig() const { return data_->thy.sig; }
  const std::vector<Term>& axioms() const { return data_->thy.axioms; }

  /// Unchecked append. Use extend() for validated extension.
  Context with(Update upd) const {
    auto d = std::make_shared<Data>(*data_);
    apply_update(upd, d->thy);
    d->updates.push_back(std::move(upd));
    return Context(std::move(d));
  }

  /// Context formed by the first n updates.
  Context prefix(std::size_t n) const {
    Context c = bare_init();
    for (std::size_t i = 0; i < n && i < size(); ++i) c = c.with(updates()[i]);
    return c;
  }

  /// Theory recomputed from the update list.
  Theory recompute() const { return prefix(size()).thy(); }

  friend Context init_ctxt();

 private:
  struct Data {
    std::vector<Update> updates;
    Theory thy;
  };
  explicit Context(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  static Context bare_init() {
    auto d = std::make_shared<Data>();
    d->thy.sig.tysof = {{"bool", 0}, {"fun", 2}};
    d->thy.sig.tmsof = {{"=", equality_type(tyvar("a"))}};
    return Context(std::move(d));
  }

  std::shared_ptr<const Data> data_;
};

/// The built-ins: Bool, the function space, and equality.
inline Context init_ctxt() { return Context::bare_init(); }

}  // namespace holdef
