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

#include <gtest/gtest.h>

#include "holdef/hol.hpp"
#include "holdef/kernel.hpp"

namespace holdef {
namespace {

using hol::B;

Term x() { return mk_var("x", B()); }
Term y() { return mk_var("y", B()); }
Term p() { return mk_var("p", B()); }

Result<Sequent> check(const Derivation& d, const Context& c = init_ctxt()) { return check_derivation(c.thy(), d); }

TEST(KernelRules, ReflConcludesEquation) {
  auto s = check(Derivation::refl(x()));
  ASSERT_TRUE(s.ok()) << s.error().str();
  EXPECT_TRUE(s->hyps.empty());
  EXPECT_TRUE(alpha_equiv(s->concl, mk_eq(x(), x())));
}

TEST(KernelRules, AssumeNeedsFormula) {
  EXPECT_TRUE(check(Derivation::assume(p())).ok());
  auto f = mk_var("f", fun_ty(B(), B()));
  auto bad = check(Derivation::assume(f));
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.error().code, Errc::SideCondition);
}

TEST(KernelRules, TransNeedsMatchingMiddle) {
  Derivation xy = Derivation::assume(mk_eq(x(), y())), yx = Derivation::assume(mk_eq(y(), x()));
  auto ok = check(Derivation::trans(xy, yx));
  ASSERT_TRUE(ok.ok());
  EXPECT_TRUE(alpha_equiv(ok->concl, mk_eq(x(), x())));
  EXPECT_EQ(ok->hyps.size(), 2u);
  EXPECT_FALSE(check(Derivation::trans(xy, xy)).ok());
}

TEST(KernelRules, AbsRejectsFreeHypothesisVariable) {
  Derivation xy = Derivation::assume(mk_eq(x(), y()));
  EXPECT_FALSE(check(Derivation::abs_cong(x(), xy)).ok());
  auto z = mk_var("z", B());
  auto s = check(Derivation::abs_cong(z, xy));
  ASSERT_TRUE(s.ok());
  EXPECT_TRUE(alpha_equiv(s->concl, mk_eq(mk_abs(z, x()), mk_abs(z, y()))));
}

TEST(KernelRules, AbsSchemaAsDisplayed) {
  // |- (\x. t) x = t
  Term t = mk_eq(x(), y());
  auto s = check(Derivation::abs(x(), t));
  ASSERT_TRUE(s.ok()) << s.error().str();
  EXPECT_TRUE(alpha_equiv(s->concl, mk_eq(mk_comb(mk_abs(x(), t), x()), t)));
}

TEST(KernelRules, BetaContractsAnyRedex) {
  Term lam = mk_abs(x(), mk_eq(x(), y()));
  auto s = check(Derivation::beta(mk_comb(lam, y())));
  ASSERT_TRUE(s.ok());
  EXPECT_TRUE(alpha_equiv(eq_rhs(s->concl), mk_eq(y(), y())));
  EXPECT_FALSE(check(Derivation::beta(mk_comb(mk_var("f", fun_ty(B(), B())), y()))).ok());
}

TEST(KernelRules, EqMpNeedsAlphaEqualAntecedent) {
  Derivation pq = Derivation::assume(mk_eq(p(), x()));
  EXPECT_TRUE(check(Derivation::eq_mp(pq, Derivation::assume(p()))).ok());
  EXPECT_FALSE(check(Derivation::eq_mp(pq, Derivation::assume(x()))).ok());
}

TEST(KernelRules, DeductAntisymDischargesCrosswise) {
  auto s = check(Derivation::deduct_antisym(Derivation::assume(p()), Derivation::assume(x())));
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->hyps.size(), 2u);
  EXPECT_TRUE(alpha_equiv(s->concl, mk_eq(p(), x())));
}

TEST(KernelRules, InstanceRules) {
  Term xa = mk_var("x", tyvar("a"));
  TypeSubst theta;
  theta.bind("a", B());
  auto s = check(Derivation::inst_type(theta, Derivation::refl(xa)));
  ASSERT_TRUE(s.ok());
  EXPECT_TRUE(alpha_equiv(s->concl, mk_eq(x(), x())));
  auto t = check(Derivation::inst({{x(), y()}}, Derivation::assume(x())));
  ASSERT_TRUE(t.ok());
  EXPECT_TRUE(alpha_equiv(t->concl, y()));
  EXPECT_TRUE(alpha_equiv(t->hyps.front(), y()));
}

TEST(KernelRules, AxiomMustBelongToTheory) {
  Context h = hol::hol_ctxt();
  EXPECT_TRUE(check(Derivation::axiom(hol::eta_axiom()), h).ok());
  auto bad = check(Derivation::axiom(p()), h);
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.error().code, Errc::NotAnAxiom);
}

TEST(KernelRules, ConstantsMustBeDeclared) {
  auto s = check(Derivation::refl(mk_const("nope", B())));
  EXPECT_FALSE(s.ok());
}

TEST(DerivedRules, ConjunctionRoundTrip) {
  Context h = hol::hol_ctxt();
  Kernel k(h.thy());
  Derivation both = derived::conj(k, Derivation::assume(p()), Derivation::assume(x()));
  auto s = k.check(derived::conjunct2(k, both));
  ASSERT_TRUE(s.ok()) << s.error().str();
  EXPECT_TRUE(alpha_equiv(s->concl, x()));
  auto t = k.check(derived::conjunct1(k, both));
  ASSERT_TRUE(t.ok()) << t.error().str();
  EXPECT_TRUE(alpha_equiv(t->concl, p()));
}

TEST(DerivedRules, DischargeAndModusPonens) {
  Context h = hol::hol_ctxt();
  Kernel k(h.thy());
  Derivation imp = derived::disch(k, p(), Derivation::assume(p()));
  auto s = k.check(imp);
  ASSERT_TRUE(s.ok()) << s.error().str();
  EXPECT_TRUE(s->hyps.empty());
  auto m = k.check(derived::mp(k, imp, Derivation::assume(p())));
  ASSERT_TRUE(m.ok()) << m.error().str();
  EXPECT_TRUE(alpha_equiv(m->concl, p()));
}

TEST(DerivedRules, TruthIsATheorem) {
  Context h = hol::hol_ctxt();
  Kernel k(h.thy());
  auto s = k.check(derived::truth(k));
  ASSERT_TRUE(s.ok()) << s.error().str();
  EXPECT_TRUE(s->hyps.empty());
  EXPECT_TRUE(alpha_equiv(s->concl, hol::T()));
}

}  // namespace
}  // namespace holdef
