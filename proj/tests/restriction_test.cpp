// Copyright 2026 The bflab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bflab/restriction.hpp"

#include <set>

#include <gtest/gtest.h>

#include "bflab/function.hpp"
#include "oracles.hpp"

namespace bflab {
namespace {

TEST(Restriction, ParseAndPrint) {
  const auto r = Restriction::parse("1*0*");
  EXPECT_EQ(r.arity(), 4);
  EXPECT_EQ(r.free_count(), 2);
  EXPECT_EQ(r.free_positions(), (std::vector<int>{1, 3}));
  EXPECT_EQ(r.to_string(), "1*0*");
  EXPECT_EQ(r.free_mask(), 0b1010U);
  EXPECT_EQ(r.ones_mask(), 0b0001U);
  EXPECT_THROW(Restriction::parse("1x"), InputShapeError);
  EXPECT_EQ(Restriction::from_masks(4, 0b1010, 0b0001), r);
}

TEST(Restriction, MergeRenumbersFreeVariablesAscending) {
  const auto r = Restriction::parse("*1*0");
  EXPECT_EQ(r.merge(std::vector<std::uint8_t>{1, 0}), (std::vector<std::uint8_t>{1, 1, 0, 0}));
  EXPECT_EQ(r.merge(std::vector<std::uint8_t>{0, 1}), (std::vector<std::uint8_t>{0, 1, 1, 0}));
  EXPECT_EQ(r.merge_index(0b10), 0b0110U);
  EXPECT_THROW(r.merge(std::vector<std::uint8_t>{1}), InputShapeError);
}

TEST(Restriction, ComposeFillsFreeCellsInOrder) {
  const auto outer = Restriction::parse("*1**");
  const auto inner = Restriction::parse("0*1");
  EXPECT_EQ(outer.compose(inner).to_string(), "01*1");
  EXPECT_THROW(outer.compose(Restriction::parse("01")), InputShapeError);
}

TEST(Restriction, EnumerationCounts) {
  EXPECT_EQ(enumerate_restrictions(2, 1).total(), 4U);
  EXPECT_EQ(enumerate_restrictions(4, 4).total(), 1U);
  // C(4,2) * 2^2 = 24, counted by walking the stream.
  auto en = enumerate_restrictions(4, 2);
  std::set<std::string> seen;
  while (auto r = en.next()) {
    EXPECT_EQ(r->free_count(), 2);
    seen.insert(r->to_string());
  }
  EXPECT_EQ(seen.size(), 24U);
  EXPECT_EQ(binomial(4, 2) * 4, 24U);
}

TEST(Restriction, EnumerationCoversEveryRestrictionOnce) {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> all;
    std::uint64_t count = 0;
    for (int k = 0; k <= n; ++k) {
      auto en = enumerate_restrictions(n, k);
      while (auto r = en.next()) {
        all.insert(r->to_string());
        ++count;
      }
      EXPECT_EQ(en.total(), restriction_count(n, k));
    }
    std::uint64_t p3 = 1;
    for (int i = 0; i < n; ++i) p3 *= 3;
    EXPECT_EQ(count, p3);
    EXPECT_EQ(all.size(), p3);
  }
}

TEST(Restriction, EnumerationOrderIsFreeSetThenAssignment) {
  auto en = enumerate_restrictions(3, 1);
  std::vector<std::string> got;
  while (auto r = en.next()) got.push_back(r->to_string());
  // Free sets {1}, {2}, {3}; fixed cells count up with the lowest fixed cell as bit 0.
  const std::vector<std::string> want{"*00", "*10", "*01", "*11", "0*0", "1*0", "0*1", "1*1",
                                      "00*", "10*", "01*", "11*"};
  EXPECT_EQ(got, want);
}

TEST(Restriction, EnumerationBudgetIsEnforced) {
  Limits lim;
  lim.enumeration_budget = 23;
  EXPECT_THROW(enumerate_restrictions(4, 2, lim), CapacityError);
  lim.enumeration_budget = 24;
  EXPECT_NO_THROW(enumerate_restrictions(4, 2, lim));
  try {
    enumerate_restrictions(30, 15);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find(std::to_string(restriction_count(30, 15))), std::string::npos);
  }
  EXPECT_THROW(enumerate_restrictions(3, 4), InputShapeError);
}

TEST(Restriction, RestrictTableMatchesMergeDefinition) {
  oracle::Rng rng{3};
  for (int n = 1; n <= 8; ++n) {
    const auto f = oracle::random_table(rng, n);
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t free = rng.next() & (f.size() - 1);
      const std::uint64_t ones = rng.next() & (f.size() - 1) & ~free;
      const auto rho = Restriction::from_masks(n, free, ones);
      const auto g = restrict_table(f, rho);
      ASSERT_EQ(g.arity(), rho.free_count());
      for (std::uint64_t y = 0; y < g.size(); ++y) {
        const auto yb = bits_of(y, g.arity());
        EXPECT_EQ(g.get(y), f.get(index_of(rho.merge(yb))));
      }
    }
  }
}

TEST(Restriction, AllFreeIsIdentity) {
  oracle::Rng rng{5};
  for (int n = 0; n <= 10; ++n) {
    const auto f = oracle::random_table(rng, n);
    EXPECT_EQ(restrict_table(f, Restriction::all_free(n)), f);
  }
}

TEST(Restriction, NestedRestrictionEqualsComposed) {
  oracle::Rng rng{9};
  for (int n = 2; n <= 10; ++n) {
    const auto f = oracle::random_table(rng, n);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Cell> c1(static_cast<std::size_t>(n));
      for (auto& c : c1) c = static_cast<Cell>(rng.below(3));
      const Restriction r1(c1);
      std::vector<Cell> c2(static_cast<std::size_t>(r1.free_count()));
      for (auto& c : c2) c = static_cast<Cell>(rng.below(3));
      const Restriction r2(c2);
      EXPECT_EQ(restrict_table(restrict_table(f, r1), r2), restrict_table(f, r1.compose(r2)));
    }
  }
}

TEST(Restriction, ArityMismatchIsAnError) {
  EXPECT_THROW(restrict_table(DenseTruthTable(3), Restriction::parse("**")), InputShapeError);
}

}  // namespace
}  // namespace bflab
