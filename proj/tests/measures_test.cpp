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

#include "bflab/measures.hpp"

#include <gtest/gtest.h>

#include "bflab/constructions.hpp"
#include "oracles.hpp"

namespace bflab {
namespace {

DenseTruthTable T(const StructuredFunction& f) { return materialize(f); }

struct Expected {
  const char* name;
  DenseTruthTable f;
  int s, bs, c, d, dqc0, dqc1;
};

TEST(Measures, SmallExamples) {
  const std::vector<Expected> cases{
      {"or3", T(or_function(3)), 3, 3, 3, 3, 3, 1},
      {"and3", T(and_function(3)), 3, 3, 3, 3, 1, 3},
      {"parity3", T(parity_function(3)), 3, 3, 3, 3, 3, 3},
      {"maj3", T(majority_function(3)), 2, 2, 2, 3, 2, 2},
      {"tribes2", T(tribes(2)), 2, 2, 2, 4, 3, 2},
      {"const", DenseTruthTable(3, true), 0, 0, 0, 0, 0, 0},
  };
  for (const auto& e : cases) {
    SCOPED_TRACE(e.name);
    EXPECT_EQ(sensitivity(e.f), e.s);
    EXPECT_EQ(block_sensitivity(e.f), e.bs);
    EXPECT_EQ(certificate(e.f), e.c);
    EXPECT_EQ(dt_depth(e.f), e.d);
    EXPECT_EQ(zero_depth(e.f), e.dqc0);
    EXPECT_EQ(one_depth(e.f), e.dqc1);
  }
}

TEST(Measures, TaggedValues) {
  const auto a = T(and_function(3));
  EXPECT_EQ(certificate(a, ValueTag::OnOnes), 3);
  EXPECT_EQ(certificate(a, ValueTag::OnZeros), 1);
  EXPECT_EQ(block_sensitivity(a, ValueTag::OnZeros), 1);
  EXPECT_EQ(sensitivity(a, ValueTag::OnOnes), 3);
  // No point carries the tag: the maximum over an empty set is 0.
  EXPECT_EQ(certificate(DenseTruthTable(3, false), ValueTag::OnOnes), 0);
}

TEST(Measures, MatchBruteForceOracles) {
  oracle::Rng rng{5};
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const auto f = oracle::random_table(rng, n);
    for (int want : {-1, 0, 1}) {
      const ValueTag tag = want < 0 ? ValueTag::All : want == 0 ? ValueTag::OnZeros : ValueTag::OnOnes;
      EXPECT_EQ(sensitivity(f, tag), oracle::aggregate(f, want, oracle::sensitivity_at));
      EXPECT_EQ(block_sensitivity(f, tag), oracle::aggregate(f, want, oracle::block_sensitivity_at));
      EXPECT_EQ(certificate(f, tag), oracle::aggregate(f, want, oracle::certificate_at));
    }
    EXPECT_EQ(dt_depth(f), (oracle::TreeOracle{f, 1, 1, {}}).run());
    EXPECT_EQ(zero_depth(f), (oracle::TreeOracle{f, 1, 0, {}}).run());
    EXPECT_EQ(one_depth(f), (oracle::TreeOracle{f, 0, 1, {}}).run());
  }
}

TEST(Measures, WitnessesAreSound) {
  oracle::Rng rng{11};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const auto f = oracle::random_table(rng, n);
    const std::uint64_t x = rng.below(f.size());
    const auto b = block_sensitivity_at(f, x);
    EXPECT_EQ(b.value, static_cast<int>(b.witness.blocks.size()));
    EXPECT_EQ(b.witness.point, x);
    EXPECT_TRUE(verify_block_family(f, b.witness));
    const auto c = certificate_at(f, x);
    EXPECT_EQ(c.value, std::popcount(c.witness));
    EXPECT_TRUE(oracle::certifies(f, x, c.witness));
  }
}

TEST(Measures, VerifyBlockFamilyRejectsBadFamilies) {
  const auto f = T(or_function(3));
  EXPECT_TRUE(verify_block_family(f, {0, {1, 2, 4}}));
  EXPECT_FALSE(verify_block_family(f, {0, {3, 2}}));  // overlap
  EXPECT_FALSE(verify_block_family(f, {7, {1}}));     // flipping one 1 keeps OR at 1
  EXPECT_FALSE(verify_block_family(f, {0, {0}}));     // empty block
}

TEST(Measures, MinimalBlocksAreMinimal) {
  const auto f = T(tribes(2));
  const auto blocks = minimal_sensitive_blocks(f, 0);
  // From 0000 a minimal sensitive block picks one variable in each tribe.
  EXPECT_EQ(blocks, (std::vector<std::uint64_t>{0b0101, 0b0110, 0b1001, 0b1010}));
}

// s <= bs <= C <= D, deg <= D and D <= C0 * C1 on every function of arity <= 3.
TEST(Measures, ChainOnAllSmallFunctions) {
  for (int n = 0; n <= 3; ++n) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << (1U << n)); ++w) {
      const auto f = DenseTruthTable::from_word(n, w);
      const int s = sensitivity(f);
      const int bs = block_sensitivity(f);
      const int c = certificate(f);
      const int d = dt_depth(f);
      ASSERT_LE(s, bs);
      ASSERT_LE(bs, c);
      ASSERT_LE(c, d);
      ASSERT_LE(degree(f), d);
      ASSERT_LE(d, std::max(1, certificate(f, ValueTag::OnZeros)) * std::max(1, certificate(f, ValueTag::OnOnes)));
      ASSERT_LE(zero_depth(f), d);
      ASSERT_LE(one_depth(f), d);
    }
  }
}

TEST(Measures, ChainOnRandomFunctions) {
  oracle::Rng rng{23};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(7));
    const auto f = oracle::random_table(rng, n);
    const int s = sensitivity(f);
    const int bs = block_sensitivity(f);
    const int c = certificate(f);
    EXPECT_LE(s, bs);
    EXPECT_LE(bs, c);
    if (n <= 8) {
      EXPECT_LE(c, dt_depth(f));
    }
  }
}

TEST(Measures, MonotoneFunctionsHaveEqualSBsC) {
  for (int n = 2; n <= 3; ++n) {
    const auto f = T(tribes(n));
    EXPECT_EQ(sensitivity(f), n);
    EXPECT_EQ(block_sensitivity(f), n);
    EXPECT_EQ(certificate(f), n);
  }
  for (int k = 1; k <= 6; k += 2) {
    const auto m = T(majority_function(k));
    EXPECT_EQ(sensitivity(m), block_sensitivity(m));
    EXPECT_EQ(block_sensitivity(m), certificate(m));
  }
}

TEST(Measures, CapsRaiseCapacityError) {
  Limits lim;
  lim.bs_cap = 3;
  lim.cert_cap = 3;
  lim.dt_cap = 3;
  const auto f = T(and_function(4));
  EXPECT_THROW(block_sensitivity(f, ValueTag::All, lim), CapacityError);
  EXPECT_THROW(certificate(f, ValueTag::All, lim), CapacityError);
  EXPECT_THROW(dt_depth(f, lim), CapacityError);
  EXPECT_THROW(zero_depth(f, lim), CapacityError);
  EXPECT_NO_THROW(sensitivity(f, ValueTag::All, lim));
}

TEST(MeasureKind, TagsOnlyOnPointMeasures) {
  EXPECT_NO_THROW(MeasureKind(Measure::Certificate, ValueTag::OnZeros));
  EXPECT_THROW(MeasureKind(Measure::DTDepth, ValueTag::OnOnes), UsageError);
  EXPECT_THROW(MeasureKind(Measure::FourierSparsity, ValueTag::OnZeros), UsageError);
}

TEST(MeasureKind, NamesRoundTrip) {
  for (const auto& e : detail::kMeasureNames) {
    EXPECT_EQ(parse_measure(e.name), e.measure);
    EXPECT_EQ(to_string(MeasureKind(e.measure)), e.name);
  }
  EXPECT_EQ(to_string(MeasureKind(Measure::BlockSensitivity, ValueTag::OnZeros)), "bs0");
  EXPECT_EQ(parse_measure("certificate"), Measure::Certificate);
  EXPECT_THROW(parse_measure("nope"), UsageError);
  EXPECT_EQ(parse_tag("zeros"), ValueTag::OnZeros);
  EXPECT_THROW(parse_tag("two"), UsageError);
}

TEST(ComputeMeasure, DispatchesAndHandlesPointForms) {
  const auto f = T(tribes(2));
  EXPECT_EQ(compute_measure(f, Measure::DTDepth), 4);
  EXPECT_EQ(compute_measure(tribes(2), Measure::Degree), 4);
  EXPECT_EQ(compute_measure(f, {Measure::Certificate, ValueTag::OnZeros}), 2);
  EXPECT_EQ(compute_measure_at(f, Measure::Sensitivity, 0), 0);
  EXPECT_EQ(compute_measure_at(f, Measure::BlockSensitivity, 0b0001), 2);
  EXPECT_THROW(compute_measure_at(f, Measure::DTDepth, 0), UsageError);
}

}  // namespace
}  // namespace bflab
