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

#include <optional>
#include <set>
#include <string>
#include <variant>

#include "holdef/deps.hpp"
#include "holdef/kernel.hpp"
#include "holdef/result.hpp"
#include "holdef/syntax.hpp"
#include "holdef/theory.hpp"

namespace holdef {

struct UpdateOptions {
  std::size_t termination_bound = kDefaultTerminationBound;
};

namespace detail {

inline Status reject(Errc c, std::string msg) { return Error{c, std::move(msg)}; }

inline Status newaxiom_ok(const NewAxiom& u, const Context& ctxt) {
  if (!has_type(u.prop, bool_ty())) return reject(Errc::IllTypedProp, "axiom is not a formula");
  if (!term_ok(ctxt.sig(), u.prop)) return reject(Errc::IllTypedProp, "axiom is not over the signature");
  return ok_status();
}

inline Status newtype_ok(const NewType& u, const Context& ctxt) {
  if (ctxt.sig().tysof.count(u.name)) return reject(Errc::NameClash, "type " + u.name + " already declared");
  return ok_status();
}

inline Status newconst_ok(const NewConst& u, const Context& ctxt) {
  if (ctxt.sig().tmsof.count(u.name)) return reject(Errc::NameClash, "constant " + u.name + " already declared");
  if (!type_ok(ctxt.sig().tysof, u.ty)) return reject(Errc::IllTypedProp, "type of " + u.name + " is not over the signature");
  return ok_status();
}

inline Status typedefn_ok(const TypeDefn& u, const Context& ctxt, const std::optional<Derivation>& deriv) {
  const auto& sig = ctxt.sig();
  if (!term_ok(sig, u.pred)) return reject(Errc::IllTypedProp, "predicate is not a term over the signature");
  if (!typedefn_shape(u)) return reject(Errc::BadTypeDefn, "predicate does not have type σ -> bool");
  if (!closed(u.pred)) return reject(Errc::OpenWitness, "predicate is not closed");
  if (sig.tysof.count(u.name)) return reject(Errc::NameClash, "type " + u.name + " already declared");
  if (sig.tmsof.count(u.abs)) return reject(Errc::NameClash, "constant " + u.abs + " already declared");
  if (sig.tmsof.count(u.rep)) return reject(Errc::NameClash, "constant " + u.rep + " already declared");
  if (u.abs == u.rep) return reject(Errc::NameClash, "abs and rep coincide");
  if (!deriv) return reject(Errc::MissingDerivation, "type definition needs a proof of pred applied to a witness");
  auto s = check_derivation(ctxt.thy(), *deriv);
  if (!s) return reject(Errc::BadDerivation, s.error().message);
  if (!s->hyps.empty()) return reject(Errc::BadDerivation, "non-emptiness proof has hypotheses");
  if (!s->concl.is_comb() || !alpha_equiv(s->concl.rator(), u.pred))
    return reject(Errc::BadDerivation, "proof does not conclude pred applied to a witness");
  return ok_status();
}

inline Status constspec_ok(const ConstSpec& u, const Context& ctxt, const UpdateOptions& opt) {
  const auto& sig = ctxt.sig();
  for (const auto& [s, t] : u.eqs) {
    if (!u.overload) {
      if (sig.tmsof.count(s)) return reject(Errc::NameClash, "constant " + s + " already declared");
      continue;
    }
    if (s == "=") return reject(Errc::BuiltinRedefinition, "equality cannot be given a definition");
    auto it = sig.tmsof.find(s);
    if (it == sig.tmsof.end()) return reject(Errc::NotAnInstance, "overloaded constant " + s + " is not declared");
    if (!is_instance_of(it->second, *type_of(t)))
      return reject(Errc::NotAnInstance, s + ":" + to_string(*type_of(t)) + " is not an instance of its declared type");
  }
  Context ext = ctxt.with(u);
  if (auto o = context_orthogonal(ext); !o) return o;
  auto v = check_termination(ext, opt.termination_bound);
  if (const auto* c = std::get_if<Cycle>(&v)) {
    std::string p;
    for (const auto& n : c->path) p += (p.empty() ? "" : " -> ") + to_string(n);
    return reject(Errc::DependencyCycle, "dependency cycle: " + p);
  }
  if (const auto* unk = std::get_if<Unknown>(&v))
    return reject(Errc::TerminationUnknown, "termination not established: " + unk->reason);
  return ok_status();
}

inline Status constspec_update_ok(const ConstSpec& u, const Context& ctxt, const std::optional<Derivation>& deriv,
                                  const UpdateOptions& opt) {
  const auto& sig = ctxt.sig();
  std::set<std::string> names;
  std::set<Term> allowed;
  std::vector<Term> eq_hyps;
  for (const auto& [s, t] : u.eqs) {
    if (!names.insert(s).second) return reject(Errc::NameClash, "constant " + s + " specified twice");
    if (!term_ok(sig, t)) return reject(Errc::IllTypedProp, "witness for " + s + " is not a term over the signature");
    if (!closed(t)) return reject(Errc::OpenWitness, "witness for " + s + " is not closed");
    Type ty = *type_of(t);
    std::set<std::string> own;
    collect_tyvars(ty, own);
    for (const auto& v : tvars(t))
      if (!own.count(v)) return reject(Errc::TvarEscape, "type variable " + v + " of the witness for " + s + " escapes its type");
    allowed.insert(mk_var(s, ty));
    eq_hyps.push_back(mk_eq(mk_var(s, ty), t));
  }
  if (!has_type(u.prop, bool_ty()) || !term_ok(sig, u.prop))
    return reject(Errc::IllTypedProp, "specification is not a formula over the signature");
  for (const auto& v : frees(u.prop))
    if (!allowed.count(v)) return reject(Errc::StrayFreeVar, "free variable " + v.name() + " in the specification");
  if (!deriv) return reject(Errc::MissingDerivation, "constant specification needs a proof of its property");
  auto s = check_derivation(ctxt.thy(), *deriv);
  if (!s) return reject(Errc::BadDerivation, s.error().message);
  if (!alpha_equiv(s->concl, u.prop)) return reject(Errc::BadDerivation, "proof does not conclude the specification");
  for (const auto& h : s->hyps) {
    bool known = std::any_of(eq_hyps.begin(), eq_hyps.end(), [&](const Term& e) { return alpha_equiv(e, h); });
    if (!known) return reject(Errc::BadDerivation, "proof uses a hypothesis other than the witness equations");
  }
  return constspec_ok(u, ctxt, opt);
}

}  // namespace detail

/// Whether `upd` may extend `ctxt`; `deriv` discharges the proof obligation of
/// a definition.
inline Status update_ok(const Update& upd, const Context& ctxt, const std::optional<Derivation>& deriv = std::nullopt,
                        const UpdateOptions& opt = {}) {
  return std::visit(
      [&](const auto& u) -> Status {
        using U = std::decay_t<decltype(u)>;
        if constexpr (std::is_same_v<U, NewAxiom>) return detail::newaxiom_ok(u, ctxt);
        else if constexpr (std::is_same_v<U, NewType>) return detail::newtype_ok(u, ctxt);
        else if constexpr (std::is_same_v<U, NewConst>) return detail::newconst_ok(u, ctxt);
        else if constexpr (std::is_same_v<U, TypeDefn>) return detail::typedefn_ok(u, ctxt, deriv);
        else return detail::constspec_update_ok(u, ctxt, deriv, opt);
      },
      upd);
}

inline Result<Context> extend(const Context& ctxt, const Update& upd,
                              const std::optional<Derivation>& deriv = std::nullopt, const UpdateOptions& opt = {}) {
  if (auto s = update_ok(upd, ctxt, deriv, opt); !s) return s.error();
  Context next = ctxt.with(upd);
  if (!theory_ok(next.thy())) return Error{Errc::IllTypedProp, "extended theory is not well-formed"};
  return next;
}

/// Axiom-free extensions: no NewAxiom among the updates after `base` updates.
inline bool definitional_after(const Context& ctxt, std::size_t base) {
  for (std::size_t i = base; i < ctxt.size(); ++i)
    if (std::holds_alternative<NewAxiom>(ctxt.updates()[i])) return false;
  return true;
}

}  // namespace holdef
