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

#include <functional>
#include <string>
#include <vector>

#include "holdef/kernel.hpp"
#include "holdef/update.hpp"

namespace holdef {

/// Defines c := rhs by a one-equation constant specification whose
/// obligation is discharged by ASSUME.
inline Result<Context> define_constant(const Context& ctxt, const std::string& name, const Term& rhs,
                                       bool overload = false, const UpdateOptions& opt = {}) {
  auto ty = type_of(rhs);
  if (!ty) return Error{Errc::IllTypedProp, "definition of " + name + " is ill-typed"};
  Term prop = mk_eq(mk_var(name, *ty), rhs);
  return extend(ctxt, ConstSpec{overload, {{name, rhs}}, prop}, Derivation::assume(prop), opt);
}

namespace hol {

inline Type B() { return bool_ty(); }
inline Term T() { return mk_const("T", B()); }
inline Term F() { return mk_const("F", B()); }
inline Term forall_const(const Type& ty) { return mk_const("!", fun_ty(fun_ty(ty, B()), B())); }
inline Term mk_forall(const Term& v, const Term& body) { return mk_comb(forall_const(v.type()), mk_abs(v, body)); }
inline Term exists_const(const Type& ty) { return mk_const("?", fun_ty(fun_ty(ty, B()), B())); }
inline Term mk_exists(const Term& v, const Term& body) { return mk_comb(exists_const(v.type()), mk_abs(v, body)); }

inline Term eta_axiom() {
  Type a = tyvar("a"), b = tyvar("b");
  Term f = mk_var("f", fun_ty(a, b)), x = mk_var("x", a);
  return mk_eq(mk_abs(x, mk_comb(f, x)), f);
}

/// Axioms the default admissibility predicate accepts.
inline std::vector<Term> fixture_axioms() { return {eta_axiom()}; }

/// Booleans, a declared Hilbert choice, extensionality and the individuals,
/// on top of the built-ins. No axiom of infinity.
inline Context hol_ctxt() {
  Term p = mk_var("p", B()), q = mk_var("q", B()), r = mk_var("r", B());
  Term f = mk_var("f", fun_ty(B(), fun_ty(B(), B())));
  Type a = tyvar("a");
  Term P = mk_var("P", fun_ty(a, B())), x = mk_var("x", a);
  auto lam = [](std::initializer_list<Term> vs, Term body) {
    std::vector<Term> v(vs);
    for (auto it = v.rbegin(); it != v.rend(); ++it) body = mk_abs(*it, body);
    return body;
  };
  auto ap = [](Term h, std::initializer_list<Term> args) {
    for (const auto& t : args) h = mk_comb(h, t);
    return h;
  };
  Term id = mk_abs(p, p);

  Context ctxt = init_ctxt();
  auto def = [&](const std::string& n, const Term& rhs) { ctxt = define_constant(ctxt, n, rhs).value(); };

  def("T", mk_eq(id, id));
  def("/\\", lam({p, q}, mk_eq(mk_abs(f, ap(f, {p, q})), mk_abs(f, ap(f, {T(), T()})))));
  def("==>", lam({p, q}, mk_eq(derived::mk_conj(p, q), p)));
  def("!", mk_abs(P, mk_eq(P, mk_abs(x, T()))));
  def("?", mk_abs(P, mk_forall(q, derived::mk_imp(mk_forall(x, derived::mk_imp(mk_comb(P, x), q)), q))));
  def("\\/", lam({p, q}, mk_forall(r, derived::mk_imp(derived::mk_imp(p, r), derived::mk_imp(derived::mk_imp(q, r), r)))));
  def("F", mk_forall(p, p));
  def("~", mk_abs(p, derived::mk_imp(p, F())));
  ctxt = extend(ctxt, NewConst{"@", fun_ty(fun_ty(a, B()), a)}).value();
  ctxt = extend(ctxt, NewAxiom{eta_axiom()}).value();
  ctxt = extend(ctxt, NewType{"ind", 0}).value();
  return ctxt;
}

}  // namespace hol

/// Decides which NewAxiom formulas are tolerated by conservativity claims.
using AdmissibilityPredicate = std::function<bool(const Term&)>;

inline AdmissibilityPredicate hol_admissible() {
  return [](const Term& p) {
    for (const auto& ax : hol::fixture_axioms())
      if (alpha_equiv(ax, p)) return true;
    return false;
  };
}

inline bool axioms_admissible(const Context& ctxt, const AdmissibilityPredicate& admissible = hol_admissible()) {
  for (const auto& u : ctxt.updates())
    if (const auto* ax = std::get_if<NewAxiom>(&u); ax && !admissible(ax->prop)) return false;
  return true;
}

}  // namespace holdef
