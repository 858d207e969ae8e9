// Copyright 2026 The findep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "findep/analysis.hpp"
#include "findep/eden.hpp"
#include "findep/recurrence.hpp"
#include "json.hpp"

using namespace findep;

TEST(Eden, InitialTriangle) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    RngStream rng(9, i);
    const EdenState s = eden_init(4, rng);
    ASSERT_EQ(s.outer().size(), 3u);
    ASSERT_EQ(s.gaps().size(), 3u);
    ASSERT_EQ(s.cluster_size(), 1u);
    const auto& o = s.outer();
    ASSERT_NE(o[0].color, o[1].color);
    ASSERT_NE(o[1].color, o[2].color);
    ASSERT_NE(o[0].color, o[2].color);
    s.validate();
  }
  RngStream rng(1, 1);
  EXPECT_THROW(eden_init(2, rng), std::invalid_argument);
  EXPECT_THROW(EdenState::initial(3, 1, 1, 2), std::invalid_argument);
}

TEST(Eden, BoundaryGrowsByOnePerStep) {
  RngStream rng(4, 0);
  EdenState s = eden_init(3, rng);
  for (std::size_t m = 1; m <= 40; ++m) {
    s = eden_step(s, rng);
    ASSERT_EQ(s.outer().size(), m + 3);
    ASSERT_EQ(s.gaps().size(), m + 3);
    ASSERT_EQ(s.cluster_size(), m + 1);
    ASSERT_EQ(s.triangles().size(), m + 1);
    ASSERT_NO_THROW(s.validate());
    ASSERT_TRUE(is_cyclically_proper(s.read_from(0)));
  }
}

TEST(Eden, ColoringCountOfStackedTriangulation) {
  for (int q : {3, 4}) {
    EdenState s = EdenState::initial(q, 1, 2, 3);
    for (std::size_t n = 1; n <= 4; ++n) {
      std::uint64_t expected = static_cast<std::uint64_t>(q * (q - 1));
      for (std::size_t j = 0; j < n; ++j) expected *= static_cast<std::uint64_t>(q - 2);
      ASSERT_EQ(count_proper_colorings(s), expected) << "q=" << q << " n=" << n;
      if (n < 4) s = s.grown(n % s.gaps().size(), 0);
    }
  }
}

// For a fixed growth shape, every sequence of root coloring and greedy color
// choices yields a different proper coloring, and all of them are reached.
TEST(Eden, GreedyChoicesHitEveryColoringOnce) {
  const int q = 4;
  const std::vector<std::size_t> shape{0, 2, 1};
  std::set<std::vector<int>> seen;
  std::uint64_t runs = 0;
  std::function<void(const EdenState&, std::size_t)> grow = [&](const EdenState& s, std::size_t depth) {
    if (depth == shape.size()) {
      ++runs;
      seen.insert(s.dual_colors());
      return;
    }
    for (std::size_t c = 0; c < static_cast<std::size_t>(q - 2); ++c) grow(s.grown(shape[depth], c), depth + 1);
  };
  EdenState last;
  for (int a = 1; a <= q; ++a)
    for (int b = 1; b <= q; ++b)
      for (int c = 1; c <= q; ++c)
        if (a != b && b != c && a != c) {
          last = EdenState::initial(q, a, b, c);
          grow(last, 0);
        }
  EdenState grown = last;
  for (std::size_t g : shape) grown = grown.grown(g, 0);
  EXPECT_EQ(runs, seen.size());
  EXPECT_EQ(seen.size(), count_proper_colorings(grown));
}

TEST(Eden, GrowthRejectsBadChoices) {
  const EdenState s = EdenState::initial(3, 1, 2, 3);
  EXPECT_THROW(s.grown(3, 0), std::out_of_range);
  EXPECT_THROW(s.grown(0, 1), std::out_of_range);
}

TEST(Eden, SnapshotIsWellFormed) {
  RngStream rng(2, 0);
  EdenState s = eden_init(4, rng);
  for (int i = 0; i < 3; ++i) s = eden_step(s, rng);
  const auto j = nlohmann::json::parse(s.snapshot_json());
  EXPECT_EQ(j["q"], 4);
  EXPECT_EQ(j["cluster_size"], 4);
  EXPECT_EQ(j["outer"].size(), 6u);
  EXPECT_EQ(j["gaps"].size(), 6u);
  EXPECT_EQ(j["triangles"].size(), 4u);
  EXPECT_EQ(j["tree_edges"].size(), s.tree().size() - 1);
}

TEST(Eden, StepMatchesCouplingKernel) {
  EXPECT_TRUE(eden_vs_necklace_kernel_check(3, 3));
  EXPECT_TRUE(eden_vs_necklace_kernel_check(4, 3));
  EXPECT_TRUE(eden_vs_necklace_kernel_check(3, 4));
  EXPECT_TRUE(eden_vs_necklace_kernel_check(5, 4));
}

TEST(Eden, SamplerFitsExactLaw) {
  std::map<State, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    RngStream rng(13, i);
    const Word x = eden_sample(6, 4, rng);
    ASSERT_TRUE(is_cyclically_proper(x));
    ++counts[x.symbols()];
  }
  const GofReport rep = chi_square_gof(counts, cycle_law(6, 4));
  EXPECT_TRUE(rep.pass) << rep.p_value;
}
