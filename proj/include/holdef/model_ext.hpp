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
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "holdef/deps.hpp"
#include "holdef/fragment.hpp"
#include "holdef/hfset.hpp"
#include "holdef/hol.hpp"
#include "holdef/kernel.hpp"
#include "holdef/semantics.hpp"
#include "holdef/theory.hpp"

namespace holdef {

struct ExtOptions {
  std::size_t depth = 2;  // ground enumeration depth for every semantic check
  SemOptions sem;
  std::size_t termination_bound = kDefaultTerminationBound;
  std::optional<HFSet> ind_carrier;  // denotation for a declared type named "ind"
  AdmissibilityPredicate admissible = hol_admissible();
  bool verify = true;  // run the post-construction model checks
};

/// A model (Δ, Γ) of ctxt and an update to extend it by.
struct ModelExtensionJob {
  std::shared_ptr<const Interpretation> base;
  Context ctxt;
  Update upd;
  ExtOptions opt;
};

/// The interpretation of upd::ctxt built from a model of ctxt. Symbols of the
/// old total fragment that are independent of upd keep their old values;
/// the rest are interpreted by their unique definition in upd::ctxt.
/// Lookups are memoised; evaluation is serialised by a recursive lock.
class ExtendedInterpretation : public Interpretation {
 public:
  ExtendedInterpretation(std::shared_ptr<const Interpretation> base, const Context& ctxt, const Update& upd,
                         ExtOptions opt)
      : base_(std::move(base)),
        ext_(ctxt.with(upd)),
        old_sig_(ctxt.sig()),
        reuse_(!std::holds_alternative<NewAxiom>(upd)),
        frag_(indep_frag_upd_spec(ext_, old_sig_)),
        opt_(std::move(opt)),
        sem_(*this, opt_.sem) {}

  const Context& context() const { return ext_; }
  const FragmentSpec& fragment() const { return frag_; }

  Result<HFSet> type_value(const Type& ty) const override {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (auto it = types_.find(ty); it != types_.end()) return it->second;
    if (!in_total_fragment_types(ext_.sig(), ty))
      return Error{Errc::FragmentViolation, "type " + to_string(ty) + " is outside the total fragment"};
    if (!types_busy_.insert(ty).second)
      return Error{Errc::Unreachable, "cyclic construction at type " + to_string(ty)};
    Result<HFSet> r = compute_type(ty);
    types_busy_.erase(ty);
    if (r) types_.emplace(ty, *r);
    return r;
  }

  Result<HFSet> const_value(const ConstInstance& c) const override {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (auto it = consts_.find(c); it != consts_.end()) return it->second;
    if (!in_total_fragment_consts(ext_.sig(), c))
      return Error{Errc::FragmentViolation, "constant " + c.name + ":" + to_string(c.ty) + " is outside the total fragment"};
    if (!consts_busy_.insert(c).second)
      return Error{Errc::Unreachable, "cyclic construction at constant " + c.name};
    Result<HFSet> r = compute_const(c);
    consts_busy_.erase(c);
    if (r) consts_.emplace(c, *r);
    return r;
  }

 private:
  template <class F>
  Result<HFSet> guarded(F&& f) const {
    try {
      return f();
    } catch (const HolError& e) {
      return e.error();
    }
  }

  Result<HFSet> compute_type(const Type& ty) const {
    if (reuse_) {
      Tri in = in_indep_frag_types(frag_, ty);
      if (in == Tri::Yes) return base_->type_value(ty);
      if (in == Tri::Unknown) return Error{Errc::Resource, "fragment membership of " + to_string(ty) + " undecided"};
    }
    return guarded([&]() -> Result<HFSet> {
      for (const auto& upd : ext_.updates()) {
        if (const auto* td = std::get_if<TypeDefn>(&upd); td && td->name == ty.name()) {
          auto sh = typedefn_shape(*td);
          auto theta = match_type(sh->abs_type, ty);
          if (!theta) break;
          return carve(*td, *sh, *theta);
        }
        if (const auto* nt = std::get_if<NewType>(&upd); nt && nt->name == ty.name()) {
          if (nt->name == "ind" && opt_.ind_carrier) return *opt_.ind_carrier;
          return hf::One();
        }
      }
      return Error{Errc::Unreachable, "no declaration for type " + to_string(ty)};
    });
  }

  HFSet carve(const TypeDefn& td, const TypeDefnShape& sh, const TypeSubst& theta) const {
    HFSet host = sem_.ext_delta(apply_subst_type(theta, sh.rep_type));
    HFSet pred = sem_.termsem(Valuation{}, theta, td.pred);
    std::vector<HFSet> keep;
    for (const auto& x : host.elements())
      if (hf::apply(pred, x).value() == hf::True()) keep.push_back(x);
    if (keep.empty()) throw HolError(Errc::Unreachable, "type " + td.name + " carves out an empty set");
    return HFSet::of(std::move(keep));
  }

  Result<HFSet> compute_const(const ConstInstance& c) const {
    if (reuse_) {
      Tri in = in_indep_frag_consts(frag_, c);
      if (in == Tri::Yes) return base_->const_value(c);
      if (in == Tri::Unknown) return Error{Errc::Resource, "fragment membership of " + c.name + " undecided"};
    }
    return guarded([&]() -> Result<HFSet> {
      for (const auto& upd : ext_.updates()) {
        if (const auto* cs = std::get_if<ConstSpec>(&upd)) {
          for (const auto& [s, w] : cs->eqs) {
            if (s != c.name) continue;
            auto theta = match_type(*type_of(w), c.ty);
            if (theta) return sem_.termsem(Valuation{}, *theta, w);
          }
        } else if (const auto* td = std::get_if<TypeDefn>(&upd); td && (td->abs == c.name || td->rep == c.name)) {
          auto sh = typedefn_shape(*td);
          bool is_abs = td->abs == c.name;
          Type gen = is_abs ? fun_ty(sh->rep_type, sh->abs_type) : fun_ty(sh->abs_type, sh->rep_type);
          auto theta = match_type(gen, c.ty);
          if (!theta) return Error{Errc::Unreachable, "ill-typed instance of " + c.name};
          HFSet sub = sem_.ext_delta(apply_subst_type(*theta, sh->abs_type));
          if (!is_abs) return hf::graph(sub, [](const HFSet& x) { return x; });
          HFSet host = sem_.ext_delta(apply_subst_type(*theta, sh->rep_type));
          const HFSet least = sub.elements().front();
          return hf::graph(host, [&](const HFSet& x) { return sub.mem(x) ? x : least; });
        }
      }
      return sem_.default_element(c.ty);
    });
  }

  std::shared_ptr<const Interpretation> base_;
  Context ext_;
  Signature old_sig_;
  bool reuse_;
  FragmentSpec frag_;
  ExtOptions opt_;
  mutable Semantics sem_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Type, HFSet> types_;
  mutable std::map<ConstInstance, HFSet> consts_;
  mutable std::set<Type> types_busy_;
  mutable std::set<ConstInstance> consts_busy_;
};

//------------------------------------------------------------------------------
// Conservativity

struct ConservativityReport {
  struct Entry {
    std::string symbol;
    bool equal;
  };
  std::vector<Entry> kept;        // fragment symbols compared
  std::vector<std::string> unknown;  // membership undecided
  std::vector<std::string> errors;   // evaluation failures
  std::size_t depth = 0;
  bool pass = true;
};

/// Values of independent-fragment symbols agree between base and extended,
/// for ground symbols up to `depth`; likewise for the supplied closed terms.
inline ConservativityReport check_conservativity(const Interpretation& base, const Interpretation& extended,
                                                 const FragmentSpec& spec, std::size_t depth,
                                                 const std::vector<Term>& terms = {}, SemOptions sopt = {}) {
  ConservativityReport rep;
  rep.depth = depth;
  auto compare = [&](const std::string& name, const Result<HFSet>& a, const Result<HFSet>& b) {
    if (!a || !b) {
      rep.errors.push_back(name + ": " + (!a ? a.error().message : b.error().message));
      rep.pass = false;
      return;
    }
    bool eq = *a == *b;
    rep.kept.push_back({name, eq});
    if (!eq) rep.pass = false;
  };
  for (const auto& ty : ground_types(spec.host, depth)) {
    Tri in = in_indep_frag_types(spec, ty);
    if (in == Tri::Unknown) rep.unknown.push_back(to_string(ty));
    if (in != Tri::Yes) continue;
    compare(to_string(ty), base.type_value(ty), extended.type_value(ty));
  }
  for (const auto& c : ground_const_instances(spec.host, depth)) {
    Tri in = in_indep_frag_consts(spec, c);
    if (in == Tri::Unknown) rep.unknown.push_back(c.name + ":" + to_string(c.ty));
    if (in != Tri::Yes) continue;
    compare(c.name + ":" + to_string(c.ty), base.const_value(c), extended.const_value(c));
  }
  Semantics sb(base, sopt), se(extended, sopt);
  for (const auto& t : terms)
    compare(term_to_string(t), sb.try_termsem(Valuation{}, {}, t), se.try_termsem(Valuation{}, {}, t));
  return rep;
}

//------------------------------------------------------------------------------
// Extension

namespace detail {

inline bool mentions_type(const Term& t, const std::string& name) {
  for (const auto& ty : term_types_nonbuiltin(t)) {
    std::vector<Type> stack{ty};
    while (!stack.empty()) {
      Type u = stack.back();
      stack.pop_back();
      if (!u.is_var() && u.name() == name) return true;
      if (!u.is_var())
        for (const auto& a : u.args()) stack.push_back(a);
    }
  }
  return false;
}

}  // namespace detail

/// The model of upd::ctxt from a model of ctxt. With opt.verify the result
/// is checked to model the new theory, to respect every witness and to agree
/// with the base on the independent fragment, all up to opt.depth.
inline Result<std::shared_ptr<const Interpretation>> extend_model(const ModelExtensionJob& job) {
  const ExtOptions& opt = job.opt;
  if (const auto* ax = std::get_if<NewAxiom>(&job.upd); ax && !opt.admissible(ax->prop))
    return Error{Errc::NotAdmissible, "axiom " + term_to_string(ax->prop) + " is not admissible"};
  Context ext = job.ctxt.with(job.upd);
  if (auto w = wellformed(ext, opt.termination_bound); !w)
    return Error{Errc::GuardFailure, "construction guard fails: " + w.error().message};
  auto model = std::make_shared<ExtendedInterpretation>(job.base, job.ctxt, job.upd, opt);
  if (!opt.verify) return std::shared_ptr<const Interpretation>(model);

  Semantics sem(*model, opt.sem);
  if (auto s = check_frag_interpretation(sem, ext.sig(), opt.depth); !s) return s.error();
  if (auto s = models_bounded(sem, ext.thy(), opt.depth); !s) {
    const auto* ax = std::get_if<NewAxiom>(&job.upd);
    if (ax && s.error().code == Errc::ModelCheck && detail::mentions_type(ax->prop, "ind"))
      return Error{Errc::RequiresInfinity, s.error().message};
    return s.error();
  }
  if (auto s = check_models_witnesses(sem, ext, opt.depth); !s) return s.error();
  auto rep = check_conservativity(*job.base, *model, model->fragment(), opt.depth, {}, opt.sem);
  if (!rep.pass) {
    std::string what = rep.errors.empty() ? "" : rep.errors.front();
    for (const auto& e : rep.kept)
      if (!e.equal) what = e.symbol + " changed";
    return Error{Errc::ModelCheck, "extension is not conservative: " + what};
  }
  return std::shared_ptr<const Interpretation>(model);
}

/// Models of each prefix of ctxt, starting from the empty interpretation of
/// init; element i models the first i updates.
inline Result<std::vector<std::shared_ptr<const Interpretation>>> build_model_chain(const Context& ctxt,
                                                                                  const ExtOptions& opt = {}) {
  std::vector<std::shared_ptr<const Interpretation>> chain{std::make_shared<FiniteInterpretation>()};
  Context cur = init_ctxt();
  for (std::size_t i = 0; i < ctxt.size(); ++i) {
    const Update& upd = ctxt.updates()[i];
    auto next = extend_model({chain.back(), cur, upd, opt});
    if (!next) return Error{next.error().code, "update " + std::to_string(i + 1) + " (" + update_kind(upd) + "): " +
                                                   next.error().message};
    chain.push_back(*next);
    cur = cur.with(upd);
  }
  return chain;
}

inline Result<std::shared_ptr<const Interpretation>> build_model(const Context& ctxt, const ExtOptions& opt = {}) {
  auto chain = build_model_chain(ctxt, opt);
  if (!chain) return chain.error();
  return chain->back();
}

//------------------------------------------------------------------------------
// Consistency

struct ConsistencyReport {
  Sequent refl;             // ⊢ x = x
  Valuation counterexample;  // falsifies x = y in the constructed model
  std::size_t depth = 0;
};

/// ⊢ x = x is derivable, and the constructed model refutes x = y.
inline Result<ConsistencyReport> check_consistency(const Context& ctxt, const ExtOptions& opt = {}) {
  if (!axioms_admissible(ctxt, opt.admissible))
    return Error{Errc::NotAdmissible, "context has an axiom outside the admissible list"};
  Term x = mk_var("x", bool_ty()), y = mk_var("y", bool_ty());
  auto refl = check_derivation(ctxt.thy(), Derivation::refl(x));
  if (!refl) return Error{refl.error().code, "reflexivity: " + refl.error().message};
  if (!refl->hyps.empty() || !alpha_equiv(refl->concl, mk_eq(x, x)))
    return Error{Errc::Unreachable, "reflexivity derivation concludes something else"};
  auto model = build_model(ctxt, opt);
  if (!model) return model.error();
  Semantics sem(**model, opt.sem);
  auto sat = satisfies(sem, {}, {}, mk_eq(x, y));
  if (!sat) return sat.error();
  if (sat->holds) return Error{Errc::ModelCheck, "x = y holds in the constructed model"};
  return ConsistencyReport{*refl, *sat->counterexample, opt.depth};
}

}  // namespace holdef
