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

#include <random>

#include "holdef/fragment.hpp"
#include "holdef/syntax.hpp"
#include "oracles.hpp"

namespace holdef {
namespace {

Type a() { return tyvar("a"); }
Type b() { return tyvar("b"); }
Type B() { return bool_ty(); }
Type list(const Type& t) { return tyapp("list", {t}); }

TEST(Types, MapExampleOutermostNonBuiltin) {
  Type map_ty = fun_ty(fun_ty(a(), B()), fun_ty(list(a()), list(B())));
  EXPECT_EQ(types_nonbuiltin(map_ty), (std::vector<Type>{a(), list(a()), list(B())}));
  EXPECT_EQ(term_types_nonbuiltin(mk_const("map", map_ty)), (std::vector<Type>{a(), list(a()), list(B())}));
}

TEST(Types, ExtractionDoesNotCommuteWithSubstitution) {
  TypeSubst theta;
  theta.bind("a", fun_ty(B(), B()));
  auto after = types_nonbuiltin(apply_subst_type(theta, a()));
  std::vector<Type> mapped;
  for (const auto& t : types_nonbuiltin(a())) mapped.push_back(apply_subst_type(theta, t));
  EXPECT_TRUE(after.empty());
  EXPECT_NE(after, mapped);
}

TEST(Types, BuiltinClosureOfRandomTypes) {
  std::mt19937 rng(7);
  std::map<std::string, std::size_t> tysof{{"bool", 0}, {"fun", 2}, {"list", 1}, {"pair", 2}, {"num", 0}};
  for (int i = 0; i < 500; ++i) {
    Type ty = testing::random_type(rng, tysof, {"a", "b"}, 4);
    EXPECT_TRUE(builtin_closure_member(types_nonbuiltin(ty), ty)) << to_string(ty);
  }
}

TEST(Match, BindsConsistently) {
  auto m = match_type(fun_ty(a(), a()), fun_ty(list(B()), list(B())));
  ASSERT_TRUE(m);
  EXPECT_EQ(apply_subst_type(*m, a()), list(B()));
  EXPECT_FALSE(match_type(fun_ty(a(), a()), fun_ty(B(), list(B()))));
  EXPECT_FALSE(match_type(list(B()), list(a())));
}

TEST(Unify, OccursCheckAndRenamingApart) {
  EXPECT_FALSE(unify_same_vars(a(), list(a())));
  // Apart: a and a list rename to disjoint variables, so they unify.
  auto u = unify_apart(a(), list(a()));
  ASSERT_TRUE(u);
  EXPECT_TRUE(is_instance_of(a(), u->common));
  auto s = unify_same_vars(fun_ty(a(), list(b())), fun_ty(list(b()), a()));
  ASSERT_TRUE(s);
  EXPECT_EQ(apply_subst_type(*s, a()), apply_subst_type(*s, list(b())));
}

TEST(Unify, MguIsMostGeneral) {
  // Oracle: every ground unifier over a small range factors through the mgu.
  std::map<std::string, std::size_t> tysof{{"bool", 0}, {"fun", 2}, {"list", 1}};
  auto range = testing::oracle_ground_types(tysof, 2);
  std::vector<Type> r(range.begin(), range.end());
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Type s = testing::random_type(rng, tysof, {"a", "b"}, 3), t = testing::random_type(rng, tysof, {"a", "b"}, 3);
    auto mgu = unify_same_vars(s, t);
    for (const auto& g : testing::oracle_assignments({"a", "b"}, r)) {
      if (testing::oracle_subst(g, s) != testing::oracle_subst(g, t)) continue;
      ASSERT_TRUE(mgu) << to_string(s) << " ~ " << to_string(t);
      Type us = apply_subst_type(*mgu, s);
      EXPECT_TRUE(is_instance_of(us, testing::oracle_subst(g, s)));
    }
    if (mgu) {
      EXPECT_EQ(apply_subst_type(*mgu, s), apply_subst_type(*mgu, t));
    }
  }
}

TEST(Ground, OrthogonalXorEqual) {
  std::map<std::string, std::size_t> tysof{{"bool", 0}, {"fun", 2}, {"num", 0}, {"list", 1}, {"pair", 2}};
  auto types = testing::oracle_ground_types(tysof, 3);
  std::size_t failures = 0;
  for (const auto& s : types)
    for (const auto& t : types)
      if (orthogonal_type(s, t) == (s == t)) ++failures;
  EXPECT_EQ(failures, 0u);
  EXPECT_EQ(types.size(), 302u);  // levels of 2, 12 and 302 types
}

TEST(Terms, SubstitutionAvoidsCapture) {
  Term x = mk_var("x", B()), y = mk_var("y", B());
  Term lam = mk_abs(y, mk_eq(x, y));
  Term out = vsubst({{x, y}}, lam);
  ASSERT_TRUE(out.is_abs());
  EXPECT_NE(out.binder().name(), "y");
  EXPECT_TRUE(vfree_in(y, out));
  EXPECT_TRUE(alpha_equiv(mk_abs(x, x), mk_abs(y, y)));
  EXPECT_FALSE(alpha_equiv(mk_abs(x, y), mk_abs(y, y)));
}

TEST(Terms, TypeInstantiationRenamesClashingBinders) {
  // (\x:a. x:bool) under a := bool must not capture the free x:bool.
  Term xa = mk_var("x", a()), xb = mk_var("x", B());
  Term t = mk_abs(xa, xb);
  TypeSubst theta;
  theta.bind("a", B());
  Term u = apply_subst_term(theta, t);
  ASSERT_TRUE(u.is_abs());
  EXPECT_NE(u.binder().name(), "x");
  EXPECT_TRUE(vfree_in(xb, u));
}

TEST(Terms, WellTypedEquationOnly) {
  Term x = mk_var("x", B()), f = mk_var("f", fun_ty(B(), B()));
  EXPECT_TRUE(has_type(mk_comb(f, x), B()));
  EXPECT_FALSE(welltyped(mk_comb(x, f)));
  EXPECT_TRUE(has_type(mk_eq(f, f), B()));
}

}  // namespace
}  // namespace holdef
