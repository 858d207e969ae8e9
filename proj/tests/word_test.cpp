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

#include <array>
#include <numeric>
#include <stdexcept>

#include "findep/word.hpp"
#include "oracles.hpp"

using namespace findep;

namespace {

Word w(const char* text, int q = 9) { return Word::parse(q, text); }

}  // namespace

TEST(Word, ParseAndFormat) {
  EXPECT_EQ(w("123").str(), "123");
  EXPECT_EQ(w("123").at(1), 1);
  EXPECT_EQ(w("123")[2], 3);
  EXPECT_EQ(Word::parse(12, "1,10,2").str(), "1,10,2");
  EXPECT_EQ(format_state(State{1, 2, 3}), "123");
  EXPECT_EQ(format_state(State{1, 12}), "1,12");
  EXPECT_EQ(parse_state("1,12"), (State{1, 12}));
  EXPECT_EQ(parse_state("0110"), (State{0, 1, 1, 0}));
  EXPECT_THROW(Word::parse(3, "124"), std::invalid_argument);
  EXPECT_THROW(Word(3, {0, 1}), std::invalid_argument);
  EXPECT_TRUE(Word::parse(3, "").empty());
}

TEST(Word, DeleteAt) {
  EXPECT_EQ(delete_at(w("123"), 2), w("13"));
  EXPECT_TRUE(delete_at(w("1"), 1).empty());
  EXPECT_EQ(delete_at(w("1213"), 4), w("121"));
  EXPECT_THROW(delete_at(w("12"), 0), std::out_of_range);
  EXPECT_THROW(delete_at(w("12"), 3), std::out_of_range);
}

TEST(Word, Rotate) {
  EXPECT_EQ(rotate(w("123"), 1), w("231"));
  EXPECT_EQ(rotate(w("123"), 0), w("123"));
  EXPECT_EQ(rotate(w("12"), 2), w("12"));
  EXPECT_EQ(rotate(w("123"), -1), w("312"));
  EXPECT_THROW(rotate(Word::parse(3, ""), 1), std::invalid_argument);
}

TEST(Word, Properness) {
  EXPECT_TRUE(is_proper(w("121")));
  EXPECT_FALSE(is_proper(w("112")));
  EXPECT_TRUE(is_proper(Word::parse(3, "")));
  EXPECT_TRUE(is_cyclically_proper(w("123")));
  EXPECT_FALSE(is_cyclically_proper(w("121")));
  EXPECT_TRUE(is_cyclically_proper(w("1")));
  EXPECT_TRUE(is_cyclically_proper(Word::parse(3, "")));
  EXPECT_FALSE(is_cyclically_proper(w("11")));
}

TEST(Word, ReflectAndColorPermutation) {
  EXPECT_EQ(reflect(w("123")), w("321"));
  EXPECT_EQ(reflect(w("11")), w("11"));
  EXPECT_TRUE(reflect(Word::parse(3, "")).empty());

  const std::array<int, 3> id{1, 2, 3}, swap12{2, 1, 3}, cyc{3, 1, 2};
  EXPECT_EQ(apply_color_perm(w("123", 3), id), w("123", 3));
  EXPECT_EQ(apply_color_perm(w("123", 3), swap12), w("213", 3));
  EXPECT_EQ(apply_color_perm(w("11", 3), cyc), w("33", 3));
  const std::array<int, 3> bad{1, 1, 3};
  EXPECT_THROW(apply_color_perm(w("12", 3), bad), std::invalid_argument);
  const std::array<int, 2> short_map{2, 1};
  EXPECT_THROW(apply_color_perm(w("123", 3), short_map), std::invalid_argument);
}

TEST(Word, Concat) {
  EXPECT_EQ(concat(w("12"), w("3")), w("123"));
  EXPECT_THROW(concat(w("12", 3), w("3", 4)), std::invalid_argument);
}

TEST(WordProperty, RotationsCompose) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : oracle::all_words(n, 2)) {
      const Word x(2, s);
      for (int a = -n; a <= n; ++a)
        for (int b = 0; b <= n; ++b) ASSERT_EQ(rotate(rotate(x, a), b), rotate(x, a + b));
    }
}

TEST(WordProperty, DeletionCommutesWithColorPermutation) {
  const std::array<int, 3> sigma{2, 3, 1};
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : oracle::all_words(n, 3)) {
      const Word x(3, s);
      for (std::size_t i = 1; i <= x.size(); ++i)
        ASSERT_EQ(apply_color_perm(delete_at(x, i), sigma), delete_at(apply_color_perm(x, sigma), i));
    }
}

TEST(WordProperty, CyclicPropernessInvariantUnderRotationAndReflection) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : oracle::all_words(n, 3)) {
      const Word x(3, s);
      const bool base = is_cyclically_proper(x);
      ASSERT_EQ(base, oracle::proper(s, true));
      ASSERT_EQ(is_proper(x), oracle::proper(s, false));
      ASSERT_EQ(is_cyclically_proper(reflect(x)), base);
      for (int r = 0; r < n; ++r) ASSERT_EQ(is_cyclically_proper(rotate(x, r)), base);
    }
}
