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
#include <map>
#include <set>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "holdef/result.hpp"
#include "holdef/syntax.hpp"
#include "holdef/theory.hpp"

namespace holdef {

/// (thy, hyps) ⊢ concl, relative to the theory the checker was built for.
/// Hypotheses are alpha-canonical: sorted by alpha_order, no alpha-duplicates.
struct Sequent {
  std::vector<Term> hyps;
  Term concl;
};

inline bool same_sequent(const Sequent& a, const Sequent& b) {
  if (a.hyps.size() != b.hyps.size() || !alpha_equiv(a.concl, b.concl)) return false;
  for (std::size_t i = 0; i < a.hyps.size(); ++i)
    if (!alpha_equiv(a.hyps[i], b.hyps[i])) return false;
  return true;
}

enum class Rule {
  Assume,
  Refl,
  Trans,
  MkComb,
  Abs,      // ⊢ (λx. t) x = t
  AbsCong,  // A ⊢ l = r  gives  A ⊢ (λx. l) = (λx. r)
  Beta,     // ⊢ (λx. t) s = t[s/x]
  EqMp,
  DeductAntisym,
  InstType,
  Inst,
  Axiom,
};

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Assume: return "ASSUME";
    case Rule::Refl: return "REFL";
    case Rule::Trans: return "TRANS";
    case Rule::MkComb: return "MK_COMB";
    case Rule::Abs: return "ABS";
    case Rule::AbsCong: return "ABS_CONG";
    case Rule::Beta: return "BETA";
    case Rule::EqMp: return "EQ_MP";
    case Rule::DeductAntisym: return "DEDUCT_ANTISYM";
    case Rule::InstType: return "INST_TYPE";
    case Rule::Inst: return "INST";
    case Rule::Axiom: return "AXIOM";
  }
  return "?";
}

/// A finite tree of primitive rule applications. Immutable and cheap to copy.
class Derivation {
 public:
  Rule rule() const { return node_->rule; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  const std::optional<Term>& term() const { return node_->term; }
  const std::optional<Term>& var() const { return node_->var; }
  const TypeSubst& tyinst() const { return node_->tyinst; }
  const TermSubst& inst() const { return node_->inst; }
  const void* id() const { return node_.get(); }

  static Derivation assume(Term p) { return make(Rule::Assume, {}, std::move(p)); }
  static Derivation refl(Term t) { return make(Rule::Refl, {}, std::move(t)); }
  static Derivation trans(Derivation a, Derivation b) { return make(Rule::Trans, {std::move(a), std::move(b)}); }
  static Derivation mk_comb(Derivation a, Derivation b) { return make(Rule::MkComb, {std::move(a), std::move(b)}); }
  static Derivation abs(Term x, Term t) { return make(Rule::Abs, {}, std::move(t), std::move(x)); }
  static Derivation abs_cong(Term x, Derivation d) { return make(Rule::AbsCong, {std::move(d)}, std::nullopt, std::move(x)); }
  static Derivation beta(Term redex) { return make(Rule::Beta, {}, std::move(redex)); }
  static Derivation eq_mp(Derivation a, Derivation b) { return make(Rule::EqMp, {std::move(a), std::move(b)}); }
  static Derivation deduct_antisym(Derivation a, Derivation b) {
    return make(Rule::DeductAntisym, {std::move(a), std::move(b)});
  }
  static Derivation inst_type(TypeSubst theta, Derivation d) {
    auto n = std::make_shared<Node>();
    n->rule = Rule::InstType;
    n->premises = {std::move(d)};
    n->tyinst = std::move(theta);
    return Derivation(std::move(n));
  }
  static Derivation inst(TermSubst sigma, Derivation d) {
    auto n = std::make_shared<Node>();
    n->rule = Rule::Inst;
    n->premises = {std::move(d)};
    n->inst = std::move(sigma);
    return Derivation(std::move(n));
  }
  static Derivation axiom(Term p) { return make(Rule::Axiom, {}, std::move(p)); }

 private:
  struct Node {
    Rule rule;
    std::vector<Derivation> premises;
    std::optional<Term> term;
    std::optional<Term> var;
    TypeSubst tyinst;
    TermSubst inst;
  };
  explicit Derivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Derivation make(Rule r, std::vector<Derivation> ps, std::optional<Term> t = std::nullopt,
                         std::optional<Term> v = std::nullopt) {
    auto n = std::make_shared<Node>();
    n->rule = r;
    n->premises = std::move(ps);
    n->term = std::move(t);
    n->var = std::move(v);
    return Derivation(std::move(n));
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline std::vector<Term> hyp_union(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
    } else if (i == a.size()) {
      out.push_back(b[j++]);
    } else {
      auto c = alpha_order(a[i], b[j]);
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j++]);
      } else {
        out.push_back(a[i++]);
        ++j;
      }
    }
  }
  return out;
}

inline std::vector<Term> hyp_remove(const std::vector<Term>& a, const Term& p) {
  std::vector<Term> out;
  for (const auto& h : a)
    if (!alpha_equiv(h, p)) out.push_back(h);
  return out;
}

inline std::vector<Term> hyp_canonical(std::vector<Term> hs) {
  std::sort(hs.begin(), hs.end(), AlphaLess{});
  hs.erase(std::unique(hs.begin(), hs.end(), [](const Term& a, const Term& b) { return alpha_equiv(a, b); }),
           hs.end());
  return hs;
}

}  // namespace detail

/// Checks derivations against one theory. Results are memoized per
/// derivation node, so shared subtrees are checked once.
class Kernel {
 public:
  explicit Kernel(Theory thy) : thy_(std::move(thy)), thy_ok_(theory_ok(thy_)) {}

  const Theory& theory() const { return thy_; }

  Result<Sequent> check(const Derivation& d) {
    if (auto it = memo_.find(d.id()); it != memo_.end()) return it->second.second;
    Result<Sequent> r = check_node(d);
    memo_.emplace(d.id(), std::make_pair(d, r));
    return r;
  }

  /// Conclusion of `d`, throwing HolError when it does not check.
  Sequent sequent(const Derivation& d) {
    auto r = check(d);
    if (!r) throw HolError(r.error().code, r.error().message);
    return r.value();
  }

 private:
  static Error fail(Errc c, Rule r, const std::string& what) {
    return Error{c, std::string(rule_name(r)) + ": " + what};
  }

  bool formula_ok(const Term& p) const { return has_type(p, bool_ty()) && term_ok(thy_.sig, p); }

  Result<Sequent> check_node(const Derivation& d) {
    const Rule r = d.rule();
    if (!thy_ok_) return fail(Errc::SideCondition, r, "theory_ok fails");
    std::vector<Sequent> prem;
    for (const auto& p : d.premises()) {
      auto s = check(p);
      if (!s) return s.error();
      prem.push_back(s.value());
    }
    auto need_premises = [&](std::size_t n) { return prem.size() == n; };

    switch (r) {
      case Rule::Assume: {
        if (!d.term() || !need_premises(0)) return fail(Errc::RuleShape, r, "expects one term");
        const Term& p = *d.term();
        if (!formula_ok(p)) return fail(Errc::SideCondition, r, "assumption is not a well-formed formula");
        return Sequent{{p}, p};
      }
      case Rule::Refl: {
        if (!d.term() || !need_premises(0)) return fail(Errc::RuleShape, r, "expects one term");
        const Term& t = *d.term();
        if (!term_ok(thy_.sig, t)) return fail(Errc::SideCondition, r, "term_ok fails");
        return Sequent{{}, mk_eq(t, t)};
      }
      case Rule::Trans: {
        if (!need_premises(2)) return fail(Errc::RuleShape, r, "expects two premises");
        if (!is_eq(prem[0].concl) || !is_eq(prem[1].concl))
          return fail(Errc::PremiseMismatch, r, "premises must be equations");
        if (!alpha_equiv(eq_rhs(prem[0].concl), eq_lhs(prem[1].concl)))
          return fail(Errc::PremiseMismatch, r, "middle terms differ");
        return Sequent{detail::hyp_union(prem[0].hyps, prem[1].hyps),
                       mk_eq(eq_lhs(prem[0].concl), eq_rhs(prem[1].concl))};
      }
      case Rule::MkComb: {
        if (!need_premises(2)) return fail(Errc::RuleShape, r, "expects two premises");
        if (!is_eq(prem[0].concl) || !is_eq(prem[1].concl))
          return fail(Errc::PremiseMismatch, r, "premises must be equations");
        Term l = mk_comb(eq_lhs(prem[0].concl), eq_lhs(prem[1].concl));
        Term rr = mk_comb(eq_rhs(prem[0].concl), eq_rhs(prem[1].concl));
        if (!welltyped(l)) return fail(Errc::SideCondition, r, "combination is not welltyped");
        return Sequent{detail::hyp_union(prem[0].hyps, prem[1].hyps), mk_eq(l, rr)};
      }
      case Rule::Abs: {
        if (!d.term() || !d.var() || !need_premises(0)) return fail(Errc::RuleShape, r, "expects variable and term");
        const Term& x = *d.var();
        const Term& t = *d.term();
        if (!x.is_var()) return fail(Errc::RuleShape, r, "binder is not a variable");
        if (!type_ok(thy_.sig.tysof, x.type())) return fail(Errc::SideCondition, r, "type_ok fails on binder");
        if (!term_ok(thy_.sig, t)) return fail(Errc::SideCondition, r, "term_ok fails");
        return Sequent{{}, mk_eq(mk_comb(mk_abs(x, t), x), t)};
      }
      case Rule::AbsCong: {
        if (!d.var() || !need_premises(1)) return fail(Errc::RuleShape, r, "expects variable and premise");
        const Term& x = *d.var();
        if (!x.is_var()) return fail(Errc::RuleShape, r, "binder is not a variable");
        if (!type_ok(thy_.sig.tysof, x.type())) return fail(Errc::SideCondition, r, "type_ok fails on binder");
        if (!is_eq(prem[0].concl)) return fail(Errc::PremiseMismatch, r, "premise must be an equation");
        for (const auto& h : prem[0].hyps)
          if (vfree_in(x, h)) return fail(Errc::SideCondition, r, "variable free in hypotheses");
        return Sequent{prem[0].hyps, mk_eq(mk_abs(x, eq_lhs(prem[0].concl)), mk_abs(x, eq_rhs(prem[0].concl)))};
      }
      case Rule::Beta: {
        if (!d.term() || !need_premises(0)) return fail(Errc::RuleShape, r, "expects a redex");
        const Term& t = *d.term();
        if (!t.is_comb() || !t.rator().is_abs()) return fail(Errc::RuleShape, r, "not a beta-redex");
        if (!term_ok(thy_.sig, t)) return fail(Errc::SideCondition, r, "term_ok fails");
        Term lam = t.rator();
        return Sequent{{}, mk_eq(t, vsubst({{lam.binder(), t.rand()}}, lam.body()))};
      }
      case Rule::EqMp: {
        if (!need_premises(2)) return fail(Errc::RuleShape, r, "expects two premises");
        if (!is_eq(prem[0].concl)) return fail(Errc::PremiseMismatch, r, "first premise must be an equation");
        if (!alpha_equiv(eq_lhs(prem[0].concl), prem[1].concl))
          return fail(Errc::PremiseMismatch, r, "second premise does not match the equation");
        return Sequent{detail::hyp_union(prem[0].hyps, prem[1].hyps), eq_rhs(prem[0].concl)};
      }
      case Rule::DeductAntisym: {
        if (!need_premises(2)) return fail(Errc::RuleShape, r, "expects two premises");
        auto h = detail::hyp_union(detail::hyp_remove(prem[0].hyps, prem[1].concl),
                                   detail::hyp_remove(prem[1].hyps, prem[0].concl));
        return Sequent{std::move(h), mk_eq(prem[0].concl, prem[1].concl)};
      }
      case Rule::InstType: {
        if (!need_premises(1)) return fail(Errc::RuleShape, r, "expects one premise");
        for (const auto& [v, ty] : d.tyinst().bindings())
          if (!type_ok(thy_.sig.tysof, ty)) return fail(Errc::SideCondition, r, "type_ok fails on " + v);
        std::vector<Term> hs;
        for (const auto& h : prem[0].hyps) hs.push_back(apply_subst_term(d.tyinst(), h));
        return Sequent{detail::hyp_canonical(std::move(hs)), apply_subst_term(d.tyinst(), prem[0].concl)};
      }
      case Rule::Inst: {
        if (!need_premises(1)) return fail(Errc::RuleShape, r, "expects one premise");
        for (const auto& [v, t] : d.inst()) {
          if (!v.is_var()) return fail(Errc::RuleShape, r, "instantiating a non-variable");
          if (!has_type(t, v.type())) return fail(Errc::SideCondition, r, "type mismatch for " + v.name());
          if (!term_ok(thy_.sig, t)) return fail(Errc::SideCondition, r, "term_ok fails on replacement");
        }
        std::vector<Term> hs;
        for (const auto& h : prem[0].hyps) hs.push_back(vsubst(d.inst(), h));
        return Sequent{detail::hyp_canonical(std::move(hs)), vsubst(d.inst(), prem[0].concl)};
      }
      case Rule::Axiom: {
        if (!d.term() || !need_premises(0)) return fail(Errc::RuleShape, r, "expects one term");
        if (!thy_.has_axiom(*d.term())) return fail(Errc::NotAnAxiom, r, "not an axiom of the theory");
        return Sequent{{}, *d.term()};
      }
    }
    return fail(Errc::RuleShape, r, "unknown rule");
  }

  Theory thy_;
  bool thy_ok_;
  std::unordered_map<const void*, std::pair<Derivation, Result<Sequent>>> memo_;
};

inline Result<Sequent> check_derivation(const Theory& thy, const Derivation& d) {
  Kernel k(thy);
  return k.check(d);
}

inline Result<Sequent> sequent_of_axiom(const Theory& thy, const Term& p) {
  if (!thy.has_axiom(p)) return Error{Errc::NotAnAxiom, "formula is not an axiom"};
  return Sequent{{}, p};
}

//------------------------------------------------------------------------------
// Derived rules. Each expands into primitive steps; the kernel is consulted
// only to read off intermediate conclusions. Names of the Boolean connectives
// follow the bool prelude: T, /\, ==>, ~.

namespace derived {

inline Derivation sym(Kernel& k, const Derivation& d) {
  Sequent s = k.sequent(d);
  if (!is_eq(s.concl)) throw HolError(Errc::PremiseMismatch, "SYM: not an equation");
  Term l = eq_lhs(s.concl);
  Derivation lth = Derivation::refl(l);
  Term eq = mk_equal(*type_of(l));
  Derivation ap = Derivation::mk_comb(Derivation::refl(eq), d);
  return Derivation::eq_mp(Derivation::mk_comb(ap, lth), lth);
}

inline Derivation ap_term(const Term& f, const Derivation& d) { return Derivation::mk_comb(Derivation::refl(f), d); }
inline Derivation ap_thm(const Derivation& d, const Term& x) { return Derivation::mk_comb(d, Derivation::refl(x)); }

/// The axiom `c = rhs` introduced for constant c, instantiated so that the
/// constant has type `at` when given.
inline Derivation definition(Kernel& k, const std::string& name, const std::optional<Type>& at = std::nullopt) {
  for (const auto& ax : k.theory().axioms) {
    if (!is_eq(ax)) continue;
    Term l = eq_lhs(ax);
    if (!l.is_const() || l.name() != name) continue;
    if (!at) return Derivation::axiom(ax);
    auto theta = match_type(l.type(), *at);
    if (!theta) continue;
    return Derivation::inst_type(*theta, Derivation::axiom(ax));
  }
  throw HolError(Errc::NotAnAxiom, "no definition for constant " + name);
}

/// ⊢ tm = tm', reducing only head beta-redexes.
inline Derivation head_beta(Kernel& k, const Term& tm) {
  if (!tm.is_comb()) return Derivation::refl(tm);
  Derivation df = head_beta(k, tm.rator());
  Term f2 = eq_rhs(k.sequent(df).concl);
  Derivation th = ap_thm(df, tm.rand());
  if (!f2.is_abs()) return th;
  Term redex = mk_comb(f2, tm.rand());
  Derivation b = Derivation::beta(redex);
  Term reduced = eq_rhs(k.sequent(b).concl);
  return Derivation::trans(Derivation::trans(th, b), head_beta(k, reduced));
}

/// From ⊢ c = λx1..xn. body, prove ⊢ c a1 .. an = body[a/x].
inline Derivation unfold(Kernel& k, const Derivation& def, const std::vector<Term>& args) {
  Derivation th = def;
  for (const auto& a : args) {
    th = ap_thm(th, a);
    Term rhs = eq_rhs(k.sequent(th).concl);
    th = Derivation::trans(th, head_beta(k, rhs));
  }
  return th;
}

inline Derivation truth(Kernel& k) {
  Derivation tdef = definition(k, "T");
  Term rhs = eq_rhs(k.sequent(tdef).concl);
  return Derivation::eq_mp(sym(k, tdef), Derivation::refl(eq_lhs(rhs)));
}

inline Derivation eqt_intro(Kernel& k, const Derivation& d) { return Derivation::deduct_antisym(d, truth(k)); }
inline Derivation eqt_elim(Kernel& k, const Derivation& d) { return Derivation::eq_mp(sym(k, d), truth(k)); }

inline Term bool_const(const std::string& name, std::size_t arity) {
  Type ty = bool_ty();
  for (std::size_t i = 0; i < arity; ++i) ty = fun_ty(bool_ty(), ty);
  return mk_const(name, ty);
}

inline Term mk_conj(const Term& p, const Term& q) { return mk_comb(mk_comb(bool_const("/\\", 2), p), q); }
inline Term mk_imp(const Term& p, const Term& q) { return mk_comb(mk_comb(bool_const("==>", 2), p), q); }
inline Term mk_neg(const Term& p) { return mk_comb(bool_const("~", 1), p); }

inline Derivation conj(Kernel& k, const Derivation& dp, const Derivation& dq) {
  Sequent sp = k.sequent(dp), sq = k.sequent(dq);
  const Term &p = sp.concl, &q = sq.concl;
  std::set<Term> avoid = frees(p);
  for (const auto& v : frees(q)) avoid.insert(v);
  for (const auto& h : sp.hyps)
    for (const auto& v : frees(h)) avoid.insert(v);
  for (const auto& h : sq.hyps)
    for (const auto& v : frees(h)) avoid.insert(v);
  Term f = variant(avoid, mk_var("f", fun_ty(bool_ty(), fun_ty(bool_ty(), bool_ty()))));
  Derivation inner = Derivation::mk_comb(ap_term(f, eqt_intro(k, dp)), eqt_intro(k, dq));
  Derivation lam = Derivation::abs_cong(f, inner);
  Derivation u = unfold(k, definition(k, "/\\"), {p, q});
  return Derivation::eq_mp(sym(k, u), lam);
}

inline Derivation conjunct(Kernel& k, const Derivation& d, bool first) {
  Sequent s = k.sequent(d);
  if (!s.concl.is_comb() || !s.concl.rator().is_comb()) throw HolError(Errc::PremiseMismatch, "CONJUNCT: not a conjunction");
  Term p = s.concl.rator().rand(), q = s.concl.rand();
  Derivation u = unfold(k, definition(k, "/\\"), {p, q});
  Derivation th = Derivation::eq_mp(u, d);
  Term x = mk_var("x", bool_ty()), y = mk_var("y", bool_ty());
  Term sel = mk_abs(x, mk_abs(y, first ? x : y));
  Derivation th2 = ap_thm(th, sel);
  Term eqn = k.sequent(th2).concl;
  Derivation l = head_beta(k, eq_lhs(eqn));
  Derivation r = head_beta(k, eq_rhs(eqn));
  return eqt_elim(k, Derivation::trans(sym(k, l), Derivation::trans(th2, r)));
}

inline Derivation conjunct1(Kernel& k, const Derivation& d) { return conjunct(k, d, true); }
inline Derivation conjunct2(Kernel& k, const Derivation& d) { return conjunct(k, d, false); }

/// A ⊢ q  gives  A - {p} ⊢ p ==> q.
inline Derivation disch(Kernel& k, const Term& p, const Derivation& d) {
  Term q = k.sequent(d).concl;
  Derivation th1 = conj(k, Derivation::assume(p), d);
  Derivation th2 = conjunct1(k, Derivation::assume(mk_conj(p, q)));
  Derivation da = Derivation::deduct_antisym(th1, th2);
  Derivation u = unfold(k, definition(k, "==>"), {p, q});
  return Derivation::eq_mp(sym(k, u), da);
}

inline Derivation mp(Kernel& k, const Derivation& dimp, const Derivation& dp) {
  Sequent s = k.sequent(dimp);
  if (!s.concl.is_comb() || !s.concl.rator().is_comb()) throw HolError(Errc::PremiseMismatch, "MP: not an implication");
  Term p = s.concl.rator().rand(), q = s.concl.rand();
  Derivation u = unfold(k, definition(k, "==>"), {p, q});
  Derivation th = Derivation::eq_mp(u, dimp);
  Derivation pq = Derivation::eq_mp(sym(k, th), dp);
  return conjunct2(k, pq);
}

/// A ⊢ p ==> F  gives  A ⊢ ~p.
inline Derivation not_intro(Kernel& k, const Derivation& d) {
  Term p = k.sequent(d).concl.rator().rand();
  Derivation u = unfold(k, definition(k, "~"), {p});
  return Derivation::eq_mp(sym(k, u), d);
}

}  // namespace derived

}  // namespace holdef
