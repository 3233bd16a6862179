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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "holdef/deps.hpp"
#include "holdef/fragment.hpp"
#include "holdef/hfset.hpp"
#include "holdef/result.hpp"
#include "holdef/syntax.hpp"
#include "holdef/theory.hpp"

namespace holdef {

/// δ on ground non-built-in types and γ on ground non-built-in constant
/// instances. Both are partial; absent entries are MissingDomain errors.
class Interpretation {
 public:
  virtual ~Interpretation() = default;
  virtual Result<HFSet> type_value(const Type& ty) const = 0;
  virtual Result<HFSet> const_value(const ConstInstance& c) const = 0;
};

/// Explicit finite tables.
class FiniteInterpretation : public Interpretation {
 public:
  std::map<Type, HFSet> delta;
  std::map<ConstInstance, HFSet> gamma;

  Result<HFSet> type_value(const Type& ty) const override {
    auto it = delta.find(ty);
    if (it == delta.end()) return Error{Errc::MissingDomain, "no carrier for type " + to_string(ty)};
    return it->second;
  }
  Result<HFSet> const_value(const ConstInstance& c) const override {
    auto it = gamma.find(c);
    if (it == gamma.end()) return Error{Errc::MissingDomain, "no value for constant " + c.name + ":" + to_string(c.ty)};
    return it->second;
  }
};

/// `base` with some entries replaced.
class OverrideInterpretation : public Interpretation {
 public:
  explicit OverrideInterpretation(std::shared_ptr<const Interpretation> base) : base_(std::move(base)) {}

  std::map<Type, HFSet> delta;
  std::map<ConstInstance, HFSet> gamma;

  Result<HFSet> type_value(const Type& ty) const override {
    if (auto it = delta.find(ty); it != delta.end()) return it->second;
    return base_->type_value(ty);
  }
  Result<HFSet> const_value(const ConstInstance& c) const override {
    if (auto it = gamma.find(c); it != gamma.end()) return it->second;
    return base_->const_value(c);
  }

 private:
  std::shared_ptr<const Interpretation> base_;
};

using VarKey = std::pair<std::string, Type>;

/// Values for (name, uninstantiated type) keys. Unlisted keys take the
/// default element of their carrier when `use_default` is set.
struct Valuation {
  std::map<VarKey, HFSet> values;
  bool use_default = false;
};

struct SemOptions {
  std::size_t carrier_cap = 64;       // elements per base-type carrier
  std::size_t funspace_cap = 1u << 17;  // elements per materialised function space
  std::size_t valuation_budget = 1u << 20;
};

/// Evaluation of types and terms in an interpretation. Throws HolError on
/// missing domain entries, non-ground types and exhausted budgets; the
/// try_ variants return Results instead.
class Semantics {
 public:
  explicit Semantics(const Interpretation& interp, SemOptions opt = {}) : interp_(interp), opt_(opt) {}

  const SemOptions& options() const { return opt_; }

  /// Bool, function spaces, and δ elsewhere.
  HFSet ext_delta(const Type& ty) {
    if (auto it = carriers_.find(ty); it != carriers_.end()) return it->second;
    if (!ty.is_ground()) throw HolError(Errc::FragmentViolation, "type " + to_string(ty) + " is not ground");
    HFSet out;
    if (ty.is_bool()) {
      out = hf::Boolset();
    } else if (ty.is_fun()) {
      HFSet d = ext_delta(ty.dom()), r = ext_delta(ty.rng());
      out = hf::Funspace(d, r, opt_.funspace_cap).value();
    } else {
      out = interp_.type_value(ty).value();
      if (out.size() > opt_.carrier_cap)
        throw HolError(Errc::Resource, "carrier of " + to_string(ty) + " exceeds the cap");
    }
    carriers_.emplace(ty, out);
    return out;
  }

  /// Equality built in, γ elsewhere.
  HFSet ext_gamma(const ConstInstance& c) {
    if (!c.ty.is_ground()) throw HolError(Errc::FragmentViolation, "constant " + c.name + " at non-ground type");
    if (c.name == "=") {
      HFSet d = ext_delta(c.ty.dom());
      return hf::graph(d, [&](const HFSet& x) { return hf::graph(d, [&](const HFSet& y) { return hf::Boolean(x == y); }); });
    }
    return interp_.const_value(c).value();
  }

  /// Membership in ext δ ty without materialising function spaces.
  bool carrier_mem(const HFSet& x, const Type& ty) {
    if (!ty.is_fun()) return ext_delta(ty).mem(x);
    HFSet d = ext_delta(ty.dom());
    if (x.size() != d.size()) return false;
    std::set<HFSet> firsts;
    for (const auto& p : x.elements()) {
      auto ab = hf::unpair(p);
      if (!ab || !d.mem(ab->first) || !firsts.insert(ab->first).second) return false;
      if (!carrier_mem(ab->second, ty.rng())) return false;
    }
    return true;
  }

  /// Least element of ext δ ty. For a function space this is the graph
  /// sending x to itself when x is in the range and to the range's least
  /// element otherwise, since the order compares graphs pairwise.
  HFSet default_element(const Type& ty) {
    if (ty.is_bool()) return hf::False();
    if (ty.is_fun()) {
      HFSet d = ext_delta(ty.dom());
      std::optional<HFSet> least;
      return hf::graph(d, [&](const HFSet& x) {
        if (carrier_mem(x, ty.rng())) return x;
        if (!least) least = default_element(ty.rng());
        return *least;
      });
    }
    HFSet c = ext_delta(ty);
    if (c.empty()) throw HolError(Errc::FragmentViolation, "carrier of " + to_string(ty) + " is empty");
    return c.elements().front();
  }

  /// Variables are read at their uninstantiated type; constants at the instantiated one.
  HFSet termsem(const Valuation& v, const TypeSubst& theta, const Term& t) {
    switch (t.kind()) {
      case TermKind::Var: {
        if (auto it = v.values.find({t.name(), t.type()}); it != v.values.end()) return it->second;
        if (v.use_default) return default_element(apply_subst_type(theta, t.type()));
        throw HolError(Errc::FragmentViolation, "variable " + t.name() + " has no value");
      }
      case TermKind::Const:
        return ext_gamma({t.name(), apply_subst_type(theta, t.type())});
      case TermKind::Comb: {
        if (t.rator().is_comb() && is_equal_const(t.rator().rator()))
          return hf::Boolean(termsem(v, theta, t.rator().rand()) == termsem(v, theta, t.rand()));
        HFSet f = termsem(v, theta, t.rator());
        HFSet x = termsem(v, theta, t.rand());
        return hf::apply(f, x).value();
      }
      case TermKind::Abs: {
        HFSet d = ext_delta(apply_subst_type(theta, t.binder().type()));
        Valuation w = v;
        VarKey key{t.binder().name(), t.binder().type()};
        return hf::graph(d, [&](const HFSet& m) {
          w.values.insert_or_assign(key, m);
          return termsem(w, theta, t.body());
        });
      }
    }
    throw HolError(Errc::IllTyped, "unknown term");
  }

  Result<HFSet> try_termsem(const Valuation& v, const TypeSubst& theta, const Term& t) {
    try {
      return termsem(v, theta, t);
    } catch (const HolError& e) {
      return e.error();
    }
  }

 private:
  const Interpretation& interp_;
  SemOptions opt_;
  std::map<Type, HFSet> carriers_;
};

//------------------------------------------------------------------------------
// Satisfaction

struct SatReport {
  bool holds = true;
  std::optional<TypeSubst> theta;          // the failing substitution
  std::optional<Valuation> counterexample;  // a valuation making hyps true and p false
};

inline std::vector<VarKey> free_keys(const std::vector<Term>& hyps, const Term& p) {
  std::set<VarKey> keys;
  auto add = [&](const Term& t) {
    for (const auto& v : frees(t)) keys.insert({v.name(), v.type()});
  };
  for (const auto& h : hyps) add(h);
  add(p);
  return {keys.begin(), keys.end()};
}

/// Every valuation of the free variables that makes all hyps true makes p true.
inline Result<SatReport> satisfies(Semantics& sem, const TypeSubst& theta, const std::vector<Term>& hyps,
                                   const Term& p) {
  try {
    std::set<std::string> tv;
    for (const auto& h : hyps) collect_tvars(h, tv);
    collect_tvars(p, tv);
    for (const auto& a : tv)
      if (!theta.contains(a) || !theta.find(a)->is_ground())
        return Error{Errc::FragmentViolation, "substitution does not ground type variable " + a};

    auto keys = free_keys(hyps, p);
    std::vector<HFSet> carriers;
    std::size_t total = 1;
    for (const auto& k : keys) {
      carriers.push_back(sem.ext_delta(apply_subst_type(theta, k.second)));
      if (carriers.back().empty()) return SatReport{};
      if (carriers.back().size() != 0 && total > sem.options().valuation_budget / carriers.back().size())
        return Error{Errc::Resource, "valuation space exceeds the budget"};
      total *= carriers.back().size();
    }
    std::vector<std::size_t> idx(keys.size(), 0);
    while (true) {
      Valuation v;
      for (std::size_t i = 0; i < keys.size(); ++i) v.values.emplace(keys[i], carriers[i].elements()[idx[i]]);
      bool premises = true;
      for (const auto& h : hyps)
        if (sem.termsem(v, theta, h) != hf::True()) {
          premises = false;
          break;
        }
      if (premises && sem.termsem(v, theta, p) != hf::True()) return SatReport{false, theta, v};
      std::size_t q = keys.size();
      while (q > 0 && ++idx[q - 1] == carriers[q - 1].size()) idx[--q] = 0;
      if (q == 0) break;
    }
    return SatReport{};
  } catch (const HolError& e) {
    return e.error();
  }
}

/// Ground type substitutions for the type variables of hyps and p, ranging
/// over signature types of depth at most `depth`.
inline std::vector<TypeSubst> ground_substs_for(const Signature& sig, const std::vector<Term>& hyps, const Term& p,
                                                std::size_t depth) {
  std::set<std::string> tv;
  for (const auto& h : hyps) collect_tvars(h, tv);
  collect_tvars(p, tv);
  return ground_substs({tv.begin(), tv.end()}, ground_types(sig, depth));
}

/// satisfies at every ground substitution up to the given depth.
inline Result<SatReport> sat_bounded(const Signature& sig, Semantics& sem, const std::vector<Term>& hyps,
                                     const Term& p, std::size_t depth) {
  for (const auto& theta : ground_substs_for(sig, hyps, p, depth)) {
    auto r = satisfies(sem, theta, hyps, p);
    if (!r) return r;
    if (!r->holds) return r;
  }
  return SatReport{};
}

/// Every axiom of thy holds up to the given depth. The error names the first
/// failing axiom.
inline Status models_bounded(Semantics& sem, const Theory& thy, std::size_t depth) {
  for (const auto& ax : thy.axioms) {
    auto r = sat_bounded(thy.sig, sem, {}, ax, depth);
    if (!r) return Error{r.error().code, "axiom " + term_to_string(ax) + ": " + r.error().message};
    if (!r->holds) {
      std::string th;
      for (const auto& [a, ty] : r->theta->bindings()) th += (th.empty() ? "" : ", ") + a + ":=" + to_string(ty);
      std::string val;
      for (const auto& [k, s] : r->counterexample->values)
        val += (val.empty() ? "" : ", ") + k.first + "=" + s.str();
      return Error{Errc::ModelCheck, "axiom " + term_to_string(ax) + " fails at [" + th + "] with {" + val + "}"};
    }
  }
  return ok_status();
}

/// δ inhabited on fragment types and γ(c) ∈ ext δ (type of c), for the total
/// fragment up to the given depth.
inline Status check_frag_interpretation(Semantics& sem, const Signature& sig, std::size_t depth) {
  try {
    for (const auto& ty : ground_types(sig, depth)) {
      if (!in_total_fragment_types(sig, ty)) continue;
      if (!hf::inhabited(sem.ext_delta(ty)))
        return Error{Errc::ModelCheck, "carrier of " + to_string(ty) + " is empty"};
    }
    for (const auto& c : ground_const_instances(sig, depth)) {
      if (!in_total_fragment_consts(sig, c)) continue;
      if (!sem.carrier_mem(sem.ext_gamma(c), c.ty))
        return Error{Errc::ModelCheck, "value of " + c.name + ":" + to_string(c.ty) + " lies outside its type"};
    }
  } catch (const HolError& e) {
    return e.error();
  }
  return ok_status();
}

/// Every constant given by a specification equals the meaning of its witness,
/// at every ground substitution up to the given depth.
inline Status check_models_witnesses(Semantics& sem, const Context& ctxt, std::size_t depth) {
  auto range = ground_types(ctxt.sig(), depth);
  for (const auto& upd : ctxt.updates()) {
    const auto* cs = std::get_if<ConstSpec>(&upd);
    if (!cs) continue;
    for (const auto& [c, w] : cs->eqs) {
      Type ty = *type_of(w);
      for (const auto& theta : ground_substs(tyvars(ty), range)) {
        ConstInstance ci{c, apply_subst_type(theta, ty)};
        try {
          HFSet have = sem.ext_gamma(ci);
          HFSet want = sem.termsem(Valuation{}, theta, w);
          if (have != want)
            return Error{Errc::ModelCheck,
                         "constant " + c + ":" + to_string(ci.ty) + " differs from the meaning of its witness"};
        } catch (const HolError& e) {
          return Error{e.error().code, "constant " + c + ":" + to_string(ci.ty) + ": " + e.error().message};
        }
      }
    }
  }
  return ok_status();
}

}  // namespace holdef
