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

#include "findep/chains.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "findep/recurrence.hpp"

namespace findep {

namespace {

void require_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string(what) + ": n must lie in [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]");
}

State rotated(const State& s, std::size_t r) {
  State out = s;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r % s.size()), out.end());
  return out;
}

// Adds every rotation of w once to counts.
void add_rotations(WeightMap& counts, const State& w) {
  for (std::size_t r = 1; r <= w.size(); ++r) counts[rotated(w, r)] += 1;
}

template <typename Statistic>
ExactDist permutation_law(int size, Statistic&& stat) {
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  WeightMap counts;
  do {
    counts[stat(perm)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ExactDist::from_weights(std::move(counts));
}

template <typename Statistic>
ExactDist bit_string_law(int size, Statistic&& stat) {
  WeightMap counts;
  std::vector<int> bits(static_cast<std::size_t>(size));
  for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
    for (int i = 0; i < size; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    counts[stat(bits)] += 1;
  }
  return ExactDist::from_weights(std::move(counts));
}

char bit(bool b) { return b ? '\1' : '\0'; }

bool has_adjacent_ones(const State& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] == '\1' && x[(i + 1) % n] == '\1') return true;
  return false;
}

}  // namespace

std::string to_string(ChainVariant v) {
  return v == ChainVariant::ColorsOneTwo_q4 ? "colors-1-2-q4" : "color-1-q3";
}

int colors_of(ChainVariant v) { return v == ChainVariant::ColorsOneTwo_q4 ? 4 : 3; }

ExactDist descent_law(int n) {
  require_range(n, 3, 9, "descent_law");
  const auto len = static_cast<std::size_t>(n);
  return permutation_law(n, [len](const std::vector<int>& p) {
    State s(len, '\0');
    for (std::size_t i = 0; i < len; ++i) s[i] = bit(p[i] > p[(i + 1) % len]);
    return s;
  });
}

ExactDist peak_law(int n) {
  require_range(n, 3, 9, "peak_law");
  const auto len = static_cast<std::size_t>(n);
  return permutation_law(n, [len](const std::vector<int>& p) {
    State s(len, '\0');
    for (std::size_t i = 0; i < len; ++i)
      s[i] = bit(p[(i + len - 1) % len] < p[i] && p[i] > p[(i + 1) % len]);
    return s;
  });
}

ExactDist bit_descent_law(int n) {
  require_range(n, 3, 20, "bit_descent_law");
  const auto len = static_cast<std::size_t>(n);
  return bit_string_law(n, [len](const std::vector<int>& b) {
    State s(len, '\0');
    for (std::size_t i = 0; i < len; ++i) s[i] = bit(b[i] > b[(i + 1) % len]);
    return s;
  });
}

ExactDist linear_descent_law(int m) {
  require_range(m, 1, 9, "linear_descent_law");
  const auto len = static_cast<std::size_t>(m);
  return permutation_law(m + 1, [len](const std::vector<int>& u) {
    State s(len, '\0');
    for (std::size_t i = 0; i < len; ++i) s[i] = bit(u[i] > u[i + 1]);
    return s;
  });
}

ExactDist linear_peak_law(int m) {
  require_range(m, 1, 8, "linear_peak_law");
  const auto len = static_cast<std::size_t>(m);
  // u[0] plays U_0, so the window position i sits at u[i + 1].
  return permutation_law(m + 2, [len](const std::vector<int>& u) {
    State s(len, '\0');
    for (std::size_t i = 0; i < len; ++i) s[i] = bit(u[i] < u[i + 1] && u[i + 1] > u[i + 2]);
    return s;
  });
}

ExactDist linear_bit_descent_law(int m) {
  require_range(m, 1, 20, "linear_bit_descent_law");
  const auto len = static_cast<std::size_t>(m);
  return bit_string_law(m + 1, [len](const std::vector<int>& b) {
    State s(len, '\0');
    for (std::size_t i = 0; i < len; ++i) s[i] = bit(b[i] > b[i + 1]);
    return s;
  });
}

ExactDist initial_law(ChainVariant v) {
  if (v == ChainVariant::ColorsOneTwo_q4) {
    return ExactDist::uniform({State{0, 0, 1}, State{0, 1, 0}, State{1, 0, 0}, State{0, 1, 1},
                               State{1, 0, 1}, State{1, 1, 0}});
  }
  return ExactDist::uniform({State{0, 0, 1}, State{0, 1, 0}, State{1, 0, 0}});
}

ExactDist j_step(ChainVariant v, const State& x) {
  const std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("j_step: state length must be >= 3");
  WeightMap counts;
  for (std::size_t i = 1; i <= n; ++i) {
    const char left = x[(i + n - 2) % n];
    const char right = x[i - 1];
    auto insert = [&](char z) {
      State w = x;
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(i - 1), z);
      add_rotations(counts, w);
    };
    if (v == ChainVariant::ColorsOneTwo_q4) {
      for (char b : {'\0', '\1'}) insert(left == right ? bit(right == '\0') : b);
    } else {
      insert(bit(left == '\0' && right == '\0'));
    }
  }
  return ExactDist::from_weights(std::move(counts));
}

ExactDist q_step(ChainVariant v, const State& x) {
  const std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("q_step: state length must be >= 3");
  if (v == ChainVariant::ColorOne_q3 && has_adjacent_ones(x))
    throw std::invalid_argument("q_step: peak-set state has adjacent ones");
  WeightMap counts;
  for (std::size_t i = 1; i <= n; ++i) {
    if (v == ChainVariant::ColorsOneTwo_q4) {
      for (char b : {'\0', '\1'}) {
        State w = x.substr(0, i - 1);
        w.push_back(b);
        w.push_back(bit(b == '\0'));
        w += x.substr(i);
        add_rotations(counts, w);
      }
    } else {
      // Bring (x_{I-1}, x_I) to the front, then replace that pair by 0 1 0.
      const State y = rotated(x, (i + n - 2) % n);
      State w{0, 1, 0};
      w += y.substr(2);
      add_rotations(counts, w);
    }
  }
  return ExactDist::from_weights(std::move(counts));
}

std::vector<State> reachable_states(ChainVariant v, int n) {
  if (n < 3) throw std::invalid_argument("reachable_states: n must be >= 3");
  std::set<State> level;
  for (const auto& s : initial_law(v).support()) level.insert(s);
  for (int len = 3; len < n; ++len) {
    std::set<State> next;
    for (const auto& s : level)
      for (const auto& t : j_step(v, s).support()) next.insert(t);
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

Kernel j_kernel(ChainVariant v, int n) {
  Kernel k{static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1), {}};
  for (const auto& s : reachable_states(v, n)) k.rows.emplace(s, j_step(v, s));
  return k;
}

Kernel q_kernel(ChainVariant v, int n) {
  Kernel k{static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1), {}};
  for (const auto& s : reachable_states(v, n)) k.rows.emplace(s, q_step(v, s));
  return k;
}

IotaStatistic iota_two_site_statistic() {
  IotaStatistic out;
  const ExactDist pair = line_window_law(2, 1, 4);
  out.both_star = 0;
  for (const auto& [s, w] : pair.weights())
    if (s[0] >= 3 && s[1] >= 3) out.both_star += Rational(w, pair.total());
  const ExactDist single = line_window_law(1, 1, 4);
  out.single_star = single.probability(State{3}) + single.probability(State{4});
  return out;
}

}  // namespace findep
