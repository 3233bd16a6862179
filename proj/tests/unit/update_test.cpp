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

namespace holdef {
namespace {

using hol::B;

Context with_c() { return extend(hol::hol_ctxt(), NewConst{"c", B()}).value(); }

// ⊢ ~(d = e) from d = F and e = (c ==> T).
Derivation distinct_proof(const Context& ctxt) {
  Kernel k(ctxt.thy());
  Term d = mk_var("d", B()), e = mk_var("e", B()), c = mk_const("c", B());
  Term h1 = mk_eq(d, hol::F()), h2 = mk_eq(e, derived::mk_imp(c, hol::T()));
  Derivation de = Derivation::assume(mk_eq(d, e));
  Derivation f_eq = Derivation::trans(derived::sym(k, Derivation::assume(h1)),
                                      Derivation::trans(de, Derivation::assume(h2)));
  Derivation ct = derived::disch(k, c, derived::truth(k));
  Derivation fth = Derivation::eq_mp(derived::sym(k, f_eq), ct);
  return derived::not_intro(k, derived::disch(k, mk_eq(d, e), fth));
}

TEST(HolContext, BuildsAndIsWellFormed) {
  Context h = hol::hol_ctxt();
  EXPECT_TRUE(theory_ok(h.thy()));
  EXPECT_TRUE(h.sig().tmsof.count("~"));
  EXPECT_TRUE(h.sig().tysof.count("ind"));
}

TEST(DerivedRules, DistinctnessObligationChecks) {
  Context ctxt = with_c();
  auto s = check_derivation(ctxt.thy(), distinct_proof(ctxt));
  ASSERT_TRUE(s.ok()) << s.error().str();
  EXPECT_EQ(s->hyps.size(), 2u);
}

TEST(UpdateOk, DistinctConstSpecAccepted) {
  Context ctxt = with_c();
  Term d = mk_var("d", B()), e = mk_var("e", B());
  ConstSpec cs{false, {{"d", hol::F()}, {"e", derived::mk_imp(mk_const("c", B()), hol::T())}},
               derived::mk_neg(mk_eq(d, e))};
  auto r = extend(ctxt, cs, distinct_proof(ctxt));
  ASSERT_TRUE(r.ok()) << r.error().str();
}

}  // namespace
}  // namespace holdef
