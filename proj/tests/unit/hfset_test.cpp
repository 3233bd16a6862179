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

#include <algorithm>
#include <thread>

#include "holdef/hfset.hpp"
#include "holdef/semantics.hpp"

namespace holdef {
namespace {

using namespace hf;

HFSet ord(std::size_t n) { return ordinal(n); }

TEST(HFSet, CanonicalUpToOrderAndDuplicates) {
  HFSet x = HFSet::of({ord(2), ord(0), ord(2), ord(1)});
  EXPECT_EQ(x, ord(3));
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(x.str(), "{{},{{}},{{},{{}}}}");
}

TEST(HFSet, OrderedByCardinalityFirst) {
  EXPECT_LT(singleton(ord(5)), ord(2));
  EXPECT_LT(HFSet(), singleton(HFSet()));
  EXPECT_LT(False(), True());
}

TEST(HFSet, PrintParseRoundTrip) {
  for (std::size_t n = 0; n < 5; ++n) {
    HFSet s = HFSet::of({ord(n), pair(ord(n), ord(1)), singleton(ord(n))});
    auto back = HFSet::parse(s.str());
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, s);
  }
  EXPECT_FALSE(HFSet::parse("{{}"));
  EXPECT_FALSE(HFSet::parse("{},{}"));
}

TEST(HFSet, EqualSetsShareStorage) {
  HFSet a = HFSet::of({ord(1), ord(3)}), b = HFSet::of({ord(3), ord(1)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(&a.elements(), &b.elements());
}

TEST(HFSet, ConcurrentConstructionAgrees) {
  std::vector<HFSet> out(4);
  std::vector<std::thread> ts;
  for (int i = 0; i < 4; ++i)
    ts.emplace_back([&, i] { out[i] = Funspace(ord(3), ord(2)).value(); });
  for (auto& t : ts) t.join();
  for (const auto& s : out) EXPECT_EQ(s, out[0]);
}

TEST(Pairs, UnpairInvertsPair) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      auto ab = unpair(pair(ord(i), ord(j)));
      ASSERT_TRUE(ab);
      EXPECT_EQ(ab->first, ord(i));
      EXPECT_EQ(ab->second, ord(j));
    }
  EXPECT_FALSE(unpair(ord(3)));
}

TEST(Funspace, BoolToBoolHasFourGraphs) {
  auto fs = Funspace(Boolset(), Boolset());
  ASSERT_TRUE(fs.ok());
  EXPECT_EQ(fs->size(), 4u);
  for (const auto& g : fs->elements()) {
    EXPECT_EQ(g.size(), 2u);
    for (const auto& x : Boolset().elements()) EXPECT_TRUE(Boolset().mem(apply(g, x).value()));
  }
}

TEST(Funspace, AbstractLandsInFunspace) {
  HFSet s = ord(3), r = ord(2);
  HFSet g = Abstract(s, r, [](const HFSet& x) { return x.size() % 2 ? ord(1) : ord(0); });
  EXPECT_TRUE(Funspace(s, r).value().mem(g));
  EXPECT_EQ(funspace_size(3, 2), 8u);
}

TEST(Funspace, CapIsAResourceError) {
  auto fs = Funspace(ord(5), ord(5), 100);
  ASSERT_FALSE(fs.ok());
  EXPECT_EQ(fs.error().code, Errc::Resource);
}

TEST(Funspace, ApplyOutsideDomainIsMissing) {
  HFSet g = graph(Boolset(), [](const HFSet& x) { return x; });
  EXPECT_EQ(apply(g, ord(2)).error().code, Errc::MissingDomain);
}

// The least element of every carrier, computed by formula, equals the first
// element of the fully enumerated carrier.
TEST(DefaultElement, MatchesEnumeratedMinimum) {
  auto interp = std::make_shared<FiniteInterpretation>();
  Type k = tyapp("k", {});
  interp->delta[k] = HFSet::of({ord(1), ord(3), pair(ord(0), ord(2))});
  Semantics sem(*interp);
  Type B = bool_ty();
  for (const Type& ty : {B, k, fun_ty(B, B), fun_ty(k, B), fun_ty(B, k), fun_ty(k, k), fun_ty(fun_ty(k, B), B),
                         fun_ty(B, fun_ty(k, B)), fun_ty(fun_ty(B, B), k)}) {
    HFSet all = sem.ext_delta(ty);
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(sem.default_element(ty), *std::min_element(all.elements().begin(), all.elements().end()))
        << to_string(ty);
  }
}

}  // namespace
}  // namespace holdef
