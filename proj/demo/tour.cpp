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

// A short walk through the library: build the families, measure them,
// restrict them and play the tribes game.

#include <iostream>

#include "bflab/claims.hpp"

using namespace bflab;

int main() {
  const auto g = materialize(rubinstein_base(2, 2));
  const auto f = materialize(modified_rubinstein(2, 2, 4));
  std::cout << "rub:2,2    table " << g.to_hex() << ", " << g.count_ones() << " accepting inputs\n";
  std::cout << "           C1 = " << certificate(g, ValueTag::OnOnes) << ", C0 = " << certificate(g, ValueTag::OnZeros)
            << ", bs0 = " << block_sensitivity(g, ValueTag::OnZeros) << "\n";
  const auto bs0 = block_sensitivity_at(f, 0);
  std::cout << "modrub:2,2,4 at 0: bs = " << bs0.value << " with " << bs0.witness.blocks.size() << " blocks, C = "
            << certificate_at(f, 0).value << "\n";

  const auto best = max_measure_over_restrictions({modified_rubinstein(2, 2, 2), Measure::BlockSensitivity, 4, std::nullopt});
  std::cout << "modrub:2,2,2 bs over restrictions with 4 free: " << best.value << " at " << best.witness.to_string()
            << "\n";

  const auto t = materialize(tribes(3));
  std::cout << "tribes:3   D = " << dt_depth(t) << ", dqc0 = " << zero_depth(t) << ", deg = " << degree(t)
            << ", sparsity = " << fourier_sparsity(t) << "\n";
  const auto t2 = materialize(tribes(2));
  const auto tree = and_dt_depth_exact(t2);
  std::cout << "tribes:2   AND-depth " << tree.depth << " (tree has " << tree.witness.nodes.size() << " nodes)\n";

  TribesAndStrategy querier(3);
  TribesAdversary adversary(3);
  const auto game = play(querier, adversary, 10);
  std::cout << "tribes:3   AND strategy vs adversary: " << game.queries.size() << " queries, " << game.zero_count
            << " answered 0, output " << *game.output << "\n";

  const auto opt = optimality_grid(Rational(1, 2), Rational(3));
  std::cout << "optimality exponent max " << opt.value << " at (" << opt.argmax.front().alpha << ", "
            << opt.argmax.front().beta << ")\n";
  return 0;
}
