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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "findep/exact.hpp"

namespace findep {

/// Set of 1-based coordinate positions.
using IndexSet = std::vector<int>;

/// Law of the coordinates in S, kept in increasing position order.
/// Throws std::invalid_argument if S has a repeated or out-of-range index.
ExactDist marginalize(const ExactDist& d, const IndexSet& S);

ExactDist pushforward(const ExactDist& d, const std::function<State(const State&)>& f);

/// Exact factorization of the joint law of (S1, S2). Throws if they overlap.
bool are_independent(const ExactDist& d, const IndexSet& S1, const IndexSet& S2);

/// Cyclic graph distance between two nonempty position sets on the n-cycle.
int cyclic_distance(const IndexSet& S1, const IndexSet& S2, int n);

struct DependenceReport {
  bool holds = true;
  /// Only interval pairs were examined (used beyond the exhaustive range).
  bool partial = false;
  std::uint64_t pairs_checked = 0;
  /// Smallest failing pair (by |S1| + |S2|, then lexicographically).
  std::optional<std::pair<IndexSet, IndexSet>> counterexample;
};

/// Largest cycle length for which all subset pairs are examined.
inline constexpr int kMaxExhaustiveDependenceLength = 10;

/// k-dependence of a law on the n-cycle: independence of every pair of
/// disjoint nonempty position sets at cyclic distance > k. Beyond
/// kMaxExhaustiveDependenceLength, throws BudgetExceeded unless
/// allow_partial is set, in which case only pairs of cyclic intervals are
/// checked and the report is marked partial.
DependenceReport verify_k_dependence(const ExactDist& d, int k, bool allow_partial = false);

struct Rotation {
  long long r = 1;
};
struct Reflection {};
struct ColorPermutation {
  std::vector<int> sigma;  // sigma[c - 1] = image of color c
};
using SymmetryOp = std::variant<Rotation, Reflection, ColorPermutation>;

/// State map realizing op on symbol strings.
State apply_symmetry(const SymmetryOp& op, const State& s);

/// True iff the law is invariant under op.
bool symmetry_check(const ExactDist& d, const SymmetryOp& op);

/// (1/2) sum |d1 - d2|.
Rational tv_distance(const ExactDist& d1, const ExactDist& d2);

struct GofReport {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  double alpha = 0.001;
  bool pass = false;
  std::uint64_t total = 0;
  std::size_t bins = 0;
  std::string diagnostic;
};

/// Pearson chi-square goodness of fit of observed counts to an exact law.
///
/// States are sorted by (expected count, state) and merged greedily from the
/// smallest expectation upward until every bin expects at least 5; a final
/// underfull bin joins the last full one. The p-value is the regularized
/// upper incomplete gamma Q(dof/2, statistic/2); the fit passes when
/// p >= alpha. Counts on states outside the support fail outright.
GofReport chi_square_gof(const std::map<State, std::uint64_t>& counts, const ExactDist& d,
                         double alpha = 0.001);

}  // namespace findep
