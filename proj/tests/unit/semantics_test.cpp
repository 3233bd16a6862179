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
#include "holdef/semantics.hpp"

namespace holdef {
namespace {

using hol::B;
using namespace hf;

TypeSubst a_to_bool() {
  TypeSubst theta;
  theta.bind("a", B());
  return theta;
}

// Variables are looked up at their uninstantiated type: x:a and x:bool stay
// distinct even when the substitution sends a to bool.
TEST(Laziness, VariablesReadAtUninstantiatedType) {
  FiniteInterpretation empty;
  Semantics sem(empty);
  Term xa = mk_var("x", tyvar("a")), xb = mk_var("x", B());
  Valuation v;
  v.values[{"x", tyvar("a")}] = True();
  v.values[{"x", B()}] = False();
  TypeSubst theta = a_to_bool();
  EXPECT_EQ(sem.termsem(v, theta, xa), True());
  EXPECT_EQ(sem.termsem(v, theta, xb), False());
  // Instantiating first, as an eager semantics would, reads the other entry.
  EXPECT_EQ(sem.termsem(v, {}, apply_subst_term(theta, xa)), False());
}

TEST(Laziness, BindersShadowAtTheirOwnType) {
  FiniteInterpretation empty;
  Semantics sem(empty);
  Term xa = mk_var("x", tyvar("a")), xb = mk_var("x", B());
  // (\x:a. x:bool) under a := bool is constant: the body reads the free x:bool.
  Term lam = mk_abs(xa, xb);
  Valuation v;
  v.values[{"x", B()}] = True();
  HFSet g = sem.termsem(v, a_to_bool(), lam);
  EXPECT_EQ(apply(g, False()).value(), True());
  EXPECT_EQ(apply(g, True()).value(), True());
}

TEST(Equality, InterpretedAsIdentity) {
  FiniteInterpretation empty;
  Semantics sem(empty);
  Term x = mk_var("x", B()), y = mk_var("y", B());
  auto refl = satisfies(sem, {}, {}, mk_eq(x, x));
  ASSERT_TRUE(refl.ok());
  EXPECT_TRUE(refl->holds);
  auto xy = satisfies(sem, {}, {}, mk_eq(x, y));
  ASSERT_TRUE(xy.ok());
  EXPECT_FALSE(xy->holds);
  ASSERT_TRUE(xy->counterexample);
  EXPECT_NE(xy->counterexample->values.at({"x", B()}), xy->counterexample->values.at({"y", B()}));
  HFSet eq = sem.ext_gamma({"=", equality_type(B())});
  EXPECT_EQ(apply(apply(eq, True()).value(), True()).value(), True());
  EXPECT_EQ(apply(apply(eq, True()).value(), False()).value(), False());
}

TEST(Satisfaction, HypothesesRestrictValuations) {
  FiniteInterpretation empty;
  Semantics sem(empty);
  Term x = mk_var("x", B()), y = mk_var("y", B());
  auto r = satisfies(sem, {}, {mk_eq(x, y)}, mk_eq(y, x));
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->holds);
}

TEST(Satisfaction, RequiresGroundingSubstitution) {
  FiniteInterpretation empty;
  Semantics sem(empty);
  Term xa = mk_var("x", tyvar("a"));
  auto r = satisfies(sem, {}, {}, mk_eq(xa, xa));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().code, Errc::FragmentViolation);
  EXPECT_TRUE(satisfies(sem, a_to_bool(), {}, mk_eq(xa, xa))->holds);
}

TEST(Satisfaction, BudgetIsAResourceLimit) {
  FiniteInterpretation empty;
  SemOptions opt;
  opt.valuation_budget = 4;
  Semantics sem(empty, opt);
  Term p = hol::T();
  for (int i = 0; i < 3; ++i) p = mk_eq(mk_var("v" + std::to_string(i), B()), p);
  auto r = satisfies(sem, {}, {}, p);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().code, Errc::Resource);
}

TEST(Carriers, MissingBaseTypeIsReported) {
  FiniteInterpretation empty;
  Semantics sem(empty);
  auto r = sem.try_termsem({}, {}, mk_abs(mk_var("z", tyapp("k", {})), mk_var("z", tyapp("k", {}))));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().code, Errc::MissingDomain);
}

TEST(Carriers, MembershipWithoutMaterialising) {
  FiniteInterpretation m;
  Type k = tyapp("k", {});
  m.delta[k] = ordinal(3);
  Semantics sem(m);
  HFSet f = graph(ordinal(3), [](const HFSet& x) { return x.empty() ? True() : False(); });
  EXPECT_TRUE(sem.carrier_mem(f, fun_ty(k, B())));
  EXPECT_FALSE(sem.carrier_mem(f, fun_ty(B(), B())));
  EXPECT_FALSE(sem.carrier_mem(graph(ordinal(2), [](const HFSet&) { return True(); }), fun_ty(k, B())));
}

TEST(Models, ModelsBoundedNamesTheFailingAxiom) {
  FiniteInterpretation m;
  Semantics sem(m);
  Theory thy = init_ctxt().thy();
  Term x = mk_var("x", B()), y = mk_var("y", B());
  thy.axioms.push_back(mk_eq(x, y));
  auto s = models_bounded(sem, thy, 1);
  ASSERT_FALSE(s.ok());
  EXPECT_EQ(s.error().code, Errc::ModelCheck);
  EXPECT_NE(s.error().message.find("x = y"), std::string::npos) << s.error().message;
}

}  // namespace
}  // namespace holdef
