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

#include "bflab/truth_table.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace bflab {
namespace {

TEST(TruthTable, BitOrderPutsVariableOneInTheLowBit) {
  // x1 alone: true exactly on odd indices.
  const auto t = DenseTruthTable::from_function(3, [](std::uint64_t e) { return e & 1U; });
  EXPECT_EQ(t.to_hex(), "aa");
  const auto x3 = DenseTruthTable::from_function(3, [](std::uint64_t e) { return (e >> 2) & 1U; });
  EXPECT_EQ(x3.to_hex(), "f0");
}

TEST(TruthTable, HexPadsToWholeDigits) {
  EXPECT_EQ(DenseTruthTable(0, true).to_hex(), "1");
  EXPECT_EQ(DenseTruthTable(1, true).to_hex(), "3");
  EXPECT_EQ(DenseTruthTable(2, true).to_hex(), "f");
  EXPECT_EQ(DenseTruthTable(4).to_hex(), "0000");
}

TEST(TruthTable, HexRoundTripOnRandomTables) {
  oracle::Rng rng{7};
  for (int n = 0; n <= 12; ++n) {
    const auto t = oracle::random_table(rng, n);
    EXPECT_EQ(DenseTruthTable::from_hex(n, t.to_hex()), t) << n;
  }
}

TEST(TruthTable, FromHexRejectsBadInput) {
  EXPECT_THROW(DenseTruthTable::from_hex(2, "ff"), InputShapeError);
  EXPECT_THROW(DenseTruthTable::from_hex(2, "g"), InputShapeError);
  EXPECT_THROW(DenseTruthTable::from_hex(1, "4"), InputShapeError);  // bit 2 beyond 2^1
  EXPECT_EQ(DenseTruthTable::from_hex(2, "A").to_hex(), "a");
}

TEST(TruthTable, CapIsEnforced) {
  EXPECT_THROW(DenseTruthTable(25), CapacityError);
  EXPECT_THROW(DenseTruthTable(10, false, 8), CapacityError);
  EXPECT_THROW(DenseTruthTable(-1), InputShapeError);
  try {
    DenseTruthTable(9, false, 8);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.cap(), 8U);
    EXPECT_NE(std::string(e.what()).find("cap 8"), std::string::npos);
  }
}

TEST(TruthTable, FileFormatRoundTrip) {
  const auto t = DenseTruthTable::from_hex(4, "1008");
  const std::string text = table_file_string(t);
  EXPECT_EQ(text, "arity: 4\n1008\n");
  std::istringstream in(text);
  EXPECT_EQ(read_table_file(in), t);
}

TEST(TruthTable, FileFormatErrors) {
  std::istringstream no_header("1008\n");
  EXPECT_THROW(read_table_file(no_header), InputShapeError);
  std::istringstream bad_arity("arity: x\n1008\n");
  EXPECT_THROW(read_table_file(bad_arity), InputShapeError);
  std::istringstream short_hex("arity: 4\n10\n");
  EXPECT_THROW(read_table_file(short_hex), InputShapeError);
  std::istringstream over_cap("arity: 9\n0\n");
  EXPECT_THROW(read_table_file(over_cap, 8), CapacityError);
}

TEST(TruthTable, CountsAndConstancy) {
  EXPECT_TRUE(DenseTruthTable(3).is_const0());
  EXPECT_TRUE(DenseTruthTable(3, true).is_const1());
  EXPECT_EQ(DenseTruthTable(3, true).count_ones(), 8U);
  EXPECT_EQ(DenseTruthTable(7, true).count_ones(), 128U);
  EXPECT_FALSE(DenseTruthTable::from_hex(2, "8").is_constant());
}

TEST(TruthTable, NegationsMatchPointwiseDefinitions) {
  oracle::Rng rng{11};
  for (int n = 0; n <= 9; ++n) {
    const auto t = oracle::random_table(rng, n);
    const auto neg = ~t;
    const auto flip = t.complement_inputs();
    for (std::uint64_t e = 0; e < t.size(); ++e) {
      EXPECT_EQ(neg.get(e), !t.get(e));
      EXPECT_EQ(flip.get(e), t.get(e ^ (t.size() - 1)));
    }
    EXPECT_EQ(~neg, t);
    EXPECT_EQ(flip.complement_inputs(), t);
  }
}

}  // namespace
}  // namespace bflab
