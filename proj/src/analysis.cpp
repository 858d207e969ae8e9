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

#include "findep/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include <boost/math/special_functions/gamma.hpp>

namespace findep {

namespace {

using Mask = std::uint32_t;

std::vector<std::size_t> checked_positions(const IndexSet& S, std::size_t n) {
  std::vector<std::size_t> pos;
  pos.reserve(S.size());
  for (int i : S) {
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw std::invalid_argument("index " + std::to_string(i) + " outside [1, " +
                                  std::to_string(n) + "]");
    pos.push_back(static_cast<std::size_t>(i - 1));
  }
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw std::invalid_argument("index set has a repeated position");
  return pos;
}

WeightMap project(const WeightMap& weights, const std::vector<std::size_t>& pos) {
  WeightMap out;
  State key(pos.size(), '\0');
  for (const auto& [s, w] : weights) {
    for (std::size_t j = 0; j < pos.size(); ++j) key[j] = s[pos[j]];
    out[key] += w;
  }
  return out;
}

std::vector<std::size_t> mask_positions(Mask m) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) pos.push_back(i);
  return pos;
}

IndexSet mask_to_set(Mask m) {
  IndexSet out;
  for (std::size_t p : mask_positions(m)) out.push_back(static_cast<int>(p) + 1);
  return out;
}

int mask_distance(Mask a, Mask b, int n) {
  int best = n;
  for (std::size_t i : mask_positions(a))
    for (std::size_t j : mask_positions(b)) {
      const int diff = std::abs(static_cast<int>(i) - static_cast<int>(j));
      best = std::min(best, std::min(diff, n - diff));
    }
  return best;
}

// Exact factorization test on the joint marginal of U = a | b. All marginals
// of a gcd-reduced law share its total, so P(x) = w(x) / total throughout.
bool factorizes(const WeightMap& joint, Mask u, Mask a, const BigCount& total) {
  const auto upos = mask_positions(u);
  std::vector<std::size_t> in_a, in_b;
  for (std::size_t j = 0; j < upos.size(); ++j) ((a >> upos[j]) & 1u ? in_a : in_b).push_back(j);
  const WeightMap wa = project(joint, in_a);
  const WeightMap wb = project(joint, in_b);
  // Every pair of marginal atoms must occur jointly.
  if (joint.size() != wa.size() * wb.size()) return false;
  State ka(in_a.size(), '\0'), kb(in_b.size(), '\0');
  for (const auto& [s, w] : joint) {
    for (std::size_t j = 0; j < in_a.size(); ++j) ka[j] = s[in_a[j]];
    for (std::size_t j = 0; j < in_b.size(); ++j) kb[j] = s[in_b[j]];
    if (w * total != wa.at(ka) * wb.at(kb)) return false;
  }
  return true;
}

}  // namespace

ExactDist marginalize(const ExactDist& d, const IndexSet& S) {
  const auto pos = checked_positions(S, d.state_length());
  return ExactDist::from_weights(project(d.weights(), pos));
}

ExactDist pushforward(const ExactDist& d, const std::function<State(const State&)>& f) {
  WeightMap out;
  for (const auto& [s, w] : d.weights()) out[f(s)] += w;
  return ExactDist::from_weights(std::move(out));
}

bool are_independent(const ExactDist& d, const IndexSet& S1, const IndexSet& S2) {
  const std::size_t n = d.state_length();
  const auto p1 = checked_positions(S1, n);
  const auto p2 = checked_positions(S2, n);
  for (std::size_t i : p1)
    if (std::binary_search(p2.begin(), p2.end(), i))
      throw std::invalid_argument("are_independent: index sets overlap");
  if (p1.empty() || p2.empty()) return true;
  std::vector<std::size_t> all = p1;
  all.insert(all.end(), p2.begin(), p2.end());
  std::sort(all.begin(), all.end());
  const WeightMap joint = project(d.weights(), all);
  Mask u = 0, a = 0;
  // Work in the coordinates of `all` so masks stay small.
  for (std::size_t j = 0; j < all.size(); ++j) {
    u |= Mask{1} << j;
    if (std::binary_search(p1.begin(), p1.end(), all[j])) a |= Mask{1} << j;
  }
  return factorizes(joint, u, a, d.total());
}

int cyclic_distance(const IndexSet& S1, const IndexSet& S2, int n) {
  if (S1.empty() || S2.empty()) throw std::invalid_argument("cyclic_distance: empty set");
  int best = n;
  for (int i : S1)
    for (int j : S2) {
      const int diff = std::abs(i - j) % n;
      best = std::min(best, std::min(diff, n - diff));
    }
  return best;
}

DependenceReport verify_k_dependence(const ExactDist& d, int k, bool allow_partial) {
  const int n = static_cast<int>(d.state_length());
  if (k < 0) throw std::invalid_argument("verify_k_dependence: k must be nonnegative");
  DependenceReport report;
  if (n > 30) throw BudgetExceeded("verify_k_dependence: cycle longer than 30");
  if (n > kMaxExhaustiveDependenceLength) {
    if (!allow_partial)
      throw BudgetExceeded("exhaustive k-dependence check is limited to n <= " +
                           std::to_string(kMaxExhaustiveDependenceLength));
    report.partial = true;
  }

  // Candidate pairs (a, b) with min(a) < min(b), grouped by |a| + |b|.
  std::vector<Mask> sets;
  if (report.partial) {
    for (int len = 1; len < n; ++len)
      for (int start = 0; start < n; ++start) {
        Mask m = 0;
        for (int j = 0; j < len; ++j) m |= Mask{1} << ((start + j) % n);
        sets.push_back(m);
      }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  } else {
    for (Mask m = 1; m < (Mask{1} << n); ++m) sets.push_back(m);
  }
  // (|a| + |b|, a | b, a, b): grouped by union so each joint marginal is
  // projected once.
  using Candidate = std::tuple<int, Mask, Mask, Mask>;
  std::vector<Candidate> pairs;
  for (Mask a : sets)
    for (Mask b : sets) {
      if ((a & b) != 0 || std::countr_zero(a) > std::countr_zero(b)) continue;
      if (mask_distance(a, b, n) <= k) continue;
      pairs.emplace_back(std::popcount(a) + std::popcount(b), a | b, a, b);
    }
  std::sort(pairs.begin(), pairs.end());

  Mask cached_union = 0;
  WeightMap joint;
  std::vector<std::pair<IndexSet, IndexSet>> failures;
  int level = 0;
  for (const auto& [size, u, a, b] : pairs) {
    if (size != level) {
      if (!failures.empty()) break;  // smallest failing size found
      level = size;
    }
    if (u != cached_union) {
      joint = project(d.weights(), mask_positions(u));
      cached_union = u;
    }
    ++report.pairs_checked;
    if (!factorizes(joint, u, a, d.total())) failures.emplace_back(mask_to_set(a), mask_to_set(b));
  }
  if (!failures.empty()) {
    report.holds = false;
    report.counterexample = *std::min_element(failures.begin(), failures.end());
  }
  return report;
}

State apply_symmetry(const SymmetryOp& op, const State& s) {
  return std::visit(
      [&s](const auto& o) -> State {
        using T = std::decay_t<decltype(o)>;
        State out = s;
        if constexpr (std::is_same_v<T, Rotation>) {
          if (s.empty()) return out;
          const auto n = static_cast<long long>(s.size());
          const auto r = static_cast<std::ptrdiff_t>(((o.r % n) + n) % n);
          std::rotate(out.begin(), out.begin() + r, out.end());
        } else if constexpr (std::is_same_v<T, Reflection>) {
          std::reverse(out.begin(), out.end());
        } else {
          for (char& c : out) {
            const int v = static_cast<unsigned char>(c);
            if (v < 1 || static_cast<std::size_t>(v) > o.sigma.size())
              throw std::invalid_argument("color permutation does not cover symbol " +
                                          std::to_string(v));
            c = static_cast<char>(o.sigma[static_cast<std::size_t>(v - 1)]);
          }
        }
        return out;
      },
      op);
}

bool symmetry_check(const ExactDist& d, const SymmetryOp& op) {
  if (const auto* perm = std::get_if<ColorPermutation>(&op)) {
    std::vector<int> sorted = perm->sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument("color map is not a bijection");
  }
  return pushforward(d, [&op](const State& s) { return apply_symmetry(op, s); }) == d;
}

Rational tv_distance(const ExactDist& d1, const ExactDist& d2) {
  BigCount sum = 0;
  auto diff = [&](const BigCount& w1, const BigCount& w2) {
    const BigCount v = w1 * d2.total() - w2 * d1.total();
    return v < 0 ? BigCount(-v) : v;
  };
  for (const auto& [s, w] : d1.weights()) sum += diff(w, d2.weight(s));
  for (const auto& [s, w] : d2.weights())
    if (!d1.contains(s)) sum += diff(0, w);
  return Rational(sum, 2 * d1.total() * d2.total());
}

GofReport chi_square_gof(const std::map<State, std::uint64_t>& counts, const ExactDist& d,
                         double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  GofReport report;
  report.alpha = alpha;
  for (const auto& [s, c] : counts) report.total += c;
  if (report.total == 0) throw std::invalid_argument("chi_square_gof: no observations");

  for (const auto& [s, c] : counts) {
    if (c != 0 && !d.contains(s)) {
      report.pass = false;
      report.p_value = 0.0;
      report.statistic = INFINITY;
      report.diagnostic = "observed state " + format_state(s) + " has probability zero";
      return report;
    }
  }

  struct Cell {
    double expected;
    State state;
    std::uint64_t observed;
  };
  std::vector<Cell> cells;
  cells.reserve(d.support_size());
  const double total = static_cast<double>(report.total);
  for (const auto& s : d.support()) {
    const Rational p = d.probability(s);
    const double prob = static_cast<double>(boost::multiprecision::numerator(p)) /
                        static_cast<double>(boost::multiprecision::denominator(p));
    auto it = counts.find(s);
    cells.push_back({prob * total, s, it == counts.end() ? 0 : it->second});
  }
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.expected < b.expected;
  });

  std::vector<std::pair<double, double>> bins;  // (expected, observed)
  double e = 0.0, o = 0.0;
  bool open = false;
  for (const Cell& c : cells) {
    e += c.expected;
    o += static_cast<double>(c.observed);
    open = true;
    if (e >= 5.0) {
      bins.emplace_back(e, o);
      e = o = 0.0;
      open = false;
    }
  }
  if (open) {
    if (bins.empty()) {
      bins.emplace_back(e, o);
    } else {
      bins.back().first += e;
      bins.back().second += o;
    }
  }

  report.bins = bins.size();
  report.dof = static_cast<int>(bins.size()) - 1;
  for (const auto& [exp, obs] : bins) report.statistic += (obs - exp) * (obs - exp) / exp;
  if (report.dof <= 0) {
    report.p_value = 1.0;
    report.diagnostic = "a single pooled bin; the test is vacuous";
  } else {
    report.p_value = boost::math::gamma_q(report.dof / 2.0, report.statistic / 2.0);
  }
  report.pass = report.p_value >= alpha;
  return report;
}

}  // namespace findep
