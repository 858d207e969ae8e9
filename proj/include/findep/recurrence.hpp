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

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "findep/exact.hpp"
#include "findep/word.hpp"

namespace findep {

/// Largest word length and alphabet size the memoized counters accept.
inline constexpr std::size_t kMaxMemoLength = 30;
inline constexpr int kMaxMemoColors = 15;

/// Default cap on q^n for exhaustive law enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 5'000'000;

struct RecurrenceOptions {
  /// Also quotient memo keys by color relabeling (first-occurrence order).
  /// Both counts are invariant under color permutations, so results are
  /// unchanged; only the table gets smaller.
  bool canonicalize_colors = false;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  /// Worker count for enumeration; 0 means hardware concurrency.
  unsigned threads = 0;
};

namespace detail {

/// Word of at most 30 symbols in [0, 15], 4 bits per symbol with x_1 in the
/// most significant occupied nibble, so integer order equals lexicographic
/// order for equal lengths.
struct PackedWord {
  unsigned __int128 bits = 0;
  std::uint8_t length = 0;

  friend bool operator==(const PackedWord&, const PackedWord&) = default;
};

struct PackedWordHash {
  std::size_t operator()(const PackedWord& w) const noexcept;
};

/// Thread-safe memo table, sharded by key hash.
class CountTable {
 public:
  bool find(const PackedWord& key, BigCount& out) const;
  void insert(const PackedWord& key, const BigCount& value);
  std::size_t size() const;
  void clear();

 private:
  static constexpr std::size_t kShards = 32;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<PackedWord, BigCount, PackedWordHash> map;
  };
  std::array<Shard, kShards> shards_;
};

}  // namespace detail

/// Memoized evaluator for the cycle count B° and the line count B⃗.
///
///   B°(x) = [x cyclically proper] * sum_i B°(x with x_i deleted),  B°(∅) = 1
///   B⃗(x) = [x proper]             * sum_i B⃗(x with x_i deleted),  B⃗(∅) = 1
///
/// Neither count depends on q beyond the symbols present, so one engine
/// serves every alphabet; q only bounds the enumerations. The cycle table is
/// keyed by the lexicographically least rotation (B° is rotation invariant),
/// the line table by the word itself. Tables persist across calls and are
/// safe to use from several threads at once.
class RecurrenceEngine {
 public:
  explicit RecurrenceEngine(RecurrenceOptions options = {});

  const RecurrenceOptions& options() const { return options_; }

  BigCount b_circ(const Word& x);
  BigCount b_vec(const Word& x);

  /// B° through the inclusion-exclusion form
  ///   B°(x) = sum_i B°(x̂_i) - 2 sum_{edges {i,i+1} of C_n} [x_i = x_{i+1}] B°(x̂_i),
  /// recursing on itself with its own plain (unrotated) table. The edges are
  /// those of the simple cycle graph: none for n = 1, one for n = 2, n for
  /// n >= 3. Throws std::invalid_argument for the empty word.
  BigCount b_circ_mobius(const Word& x);

  /// sum over y in [q]^n of B°(y); Z°(0, q) = 1.
  BigCount z_circ(int n, int q);
  /// sum over y in [q]^n of B⃗(y).
  BigCount z_vec(int n, int q);

  /// sum over y in [q]^k of B°(xy).
  BigCount restriction_sum(const Word& x, int k);

  /// P(x) = B°(x) / Z°(n, q) on [q]^n. Requires q >= 3; throws
  /// BudgetExceeded when q^n exceeds the enumeration budget.
  ExactDist cycle_law(int n, int q);

  /// Law of a length-n window of the line process, P(x) = B⃗(x) / Z⃗(n, q).
  /// The formula depends on q only; k is validated (k >= 1) and reported by
  /// defines_coloring. Same budget and q >= 3 rules as cycle_law.
  ExactDist line_window_law(int n, int k, int q);

  std::size_t cycle_table_size() const { return cycle_table_.size(); }
  std::size_t line_table_size() const { return line_table_.size(); }

 private:
  BigCount cycle_count(const detail::PackedWord& w);
  BigCount line_count(const detail::PackedWord& w);
  BigCount mobius_count(const detail::PackedWord& w);
  BigCount cycle_deletion_sum(const detail::PackedWord& w);

  template <typename Visit>
  void enumerate_words(int n, int q, bool cyclic, Visit&& visit);
  void check_budget(int n, int q) const;

  RecurrenceOptions options_;
  detail::CountTable cycle_table_;
  detail::CountTable line_table_;
  detail::CountTable mobius_table_;
};

/// n! q (q-1) (q-2)^(n-2). Throws std::invalid_argument for n < 2.
BigCount z_circ_closed(int n, int q);

/// True for (k, q) in {(1, 4), (2, 3)}, where the window law is that of an
/// actual k-dependent coloring of the line; other pairs are formal only.
bool defines_coloring(int k, int q);

/// Process-wide engine with default options, shared by the convenience
/// functions below.
RecurrenceEngine& default_engine();

BigCount b_circ(const Word& x);
BigCount b_circ_mobius(const Word& x);
BigCount b_vec(const Word& x);
BigCount z_circ(int n, int q);
ExactDist cycle_law(int n, int q);
ExactDist line_window_law(int n, int k, int q);
BigCount restriction_sum(const Word& x, int k);

}  // namespace findep
