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
#include "oracles.hpp"

namespace holdef {
namespace {

using hol::B;

ConstInstance ci(const std::string& n, const Type& ty) { return ConstInstance{n, ty}; }

TEST(Fragment, DistinctnessExampleSplitsDAndE) {
  Elaborated e = testing::load_fixture("fixture41.thy");
  Context before = e.before(3);
  FragmentSpec spec = make_fragment_spec(before, {DepNode(ci("c", B()))}, before.sig());
  EXPECT_EQ(in_indep_frag_consts(spec, ci("d", B())), Tri::Yes);
  EXPECT_EQ(in_indep_frag_consts(spec, ci("e", B())), Tri::No);
  VQuery q = in_V(spec, DepNode(ci("e", B())));
  EXPECT_EQ(q.answer, Tri::Yes);
  EXPECT_EQ(q.path, (std::vector<DepNode>{DepNode(ci("e", B())), DepNode(ci("c", B()))}));
}

TEST(Fragment, UpdateSpecUsesIntroducedSymbols) {
  Elaborated e = testing::load_fixture("fixture41.thy");
  FragmentSpec spec = indep_frag_upd_spec(e.after(3));
  EXPECT_EQ(spec.U, (std::vector<DepNode>{DepNode(ci("c", B()))}));
  EXPECT_EQ(in_indep_frag_consts(spec, ci("e", B())), Tri::No);
  EXPECT_EQ(in_indep_frag_consts(spec, ci("d", B())), Tri::Yes);
  EXPECT_EQ(in_indep_frag_consts(spec, ci("c", B())), Tri::No);
}

TEST(Fragment, ListOrderingDependsOnElementOrdering) {
  Elaborated e = testing::load_fixture("lex.thy");
  Type a = tyvar("a"), lb = tyapp("list", {B()});
  FragmentSpec spec =
      make_fragment_spec(e.ctxt, {DepNode(ci("<=", fun_ty(a, fun_ty(a, B()))))}, e.ctxt.sig());
  EXPECT_EQ(in_V(spec, DepNode(ci("<=", fun_ty(lb, fun_ty(lb, B()))))).answer, Tri::Yes);
  EXPECT_EQ(in_indep_frag_consts(spec, ci("<=", fun_ty(lb, fun_ty(lb, B())))), Tri::No);
  EXPECT_EQ(in_indep_frag_types(spec, lb), Tri::Yes);
}

TEST(Fragment, NonGroundOrUndeclaredSymbolsAreOutside) {
  Elaborated e = testing::load_fixture("fixture41.thy");
  FragmentSpec spec = indep_frag_upd_spec(e.after(3));
  EXPECT_EQ(in_indep_frag_consts(spec, ci("zz", B())), Tri::No);
  EXPECT_EQ(in_indep_frag_types(spec, tyvar("a")), Tri::No);
  EXPECT_EQ(in_indep_frag_types(spec, B()), Tri::No);  // built-in
  EXPECT_EQ(in_types_of_frag(spec, fun_ty(B(), B())), Tri::Yes);
}

TEST(Fragment, ExhaustedSearchIsUnknown) {
  Elaborated e = testing::load_fixture("lex.thy");
  FragmentSpec spec = indep_frag_upd_spec(e.after(5));  // <= at bool
  Type lb = tyapp("list", {B()});
  EXPECT_EQ(in_indep_frag_consts(spec, ci("<=", fun_ty(lb, fun_ty(lb, B())))), Tri::No);
  spec.bound = 0;
  EXPECT_EQ(in_indep_frag_consts(spec, ci("<=", fun_ty(lb, fun_ty(lb, B())))), Tri::Unknown);
}

TEST(SigFragment, HoldsOnFixtures) {
  for (const auto& name : testing::definitional_fixtures()) {
    Elaborated e = testing::load_fixture(name);
    for (std::size_t k = 1; k <= e.entries.size(); ++k) {
      FragmentSpec spec = indep_frag_upd_spec(e.after(k));
      auto s = check_is_sig_fragment(spec, ground_const_instances(spec.host, 2));
      EXPECT_TRUE(s.ok()) << name << " update " << k << ": " << s.error().str();
    }
  }
}

TEST(SigFragment, HoldsOnRandomContexts) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 40; ++i) {
    Context ctxt = testing::random_context(rng);
    FragmentSpec spec = indep_frag_upd_spec(ctxt);
    auto s = check_is_sig_fragment(spec, ground_const_instances(spec.host, 2));
    EXPECT_TRUE(s.ok()) << s.error().str();
  }
}

// A broken spec (a constant kept while its type is excluded) is caught.
TEST(SigFragment, DetectsAViolation) {
  Context ctxt = extend(init_ctxt(), NewType{"t", 0}).value();
  ctxt = extend(ctxt, NewConst{"z", tyapp("t", {})}).value();
  FragmentSpec spec = make_fragment_spec(ctxt, {DepNode(tyapp("t", {}))}, ctxt.sig());
  spec.edges.clear();  // z no longer reaches its type
  auto s = check_is_sig_fragment(spec, {ci("z", tyapp("t", {}))});
  ASSERT_FALSE(s.ok());
  EXPECT_EQ(s.error().code, Errc::FragmentViolation);
}

TEST(Enumeration, GroundTypesAgreeWithOracle) {
  Elaborated e = testing::load_fixture("overload.thy");
  for (std::size_t d = 1; d <= 3; ++d) {
    auto lib = ground_types(e.ctxt.sig(), d);
    auto ora = testing::oracle_ground_types(e.ctxt.sig().tysof, d);
    EXPECT_EQ(std::set<Type>(lib.begin(), lib.end()), ora) << "depth " << d;
  }
}

}  // namespace
}  // namespace holdef
