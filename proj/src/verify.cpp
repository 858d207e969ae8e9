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

#include "findep/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "findep/analysis.hpp"
#include "findep/chains.hpp"
#include "findep/eden.hpp"
#include "findep/growth.hpp"
#include "findep/recurrence.hpp"

namespace findep {

namespace {

int cap(const VerifyOptions& o, int default_max) {
  return o.max_n ? std::min(*o.max_n, default_max) : default_max;
}

// Calls f on every word of [q]^n.
void for_each_word(int n, int q, const std::function<void(const Word&)>& f) {
  State s(static_cast<std::size_t>(n), '\1');
  while (true) {
    f(Word(q, s));
    int i = n - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == static_cast<char>(q)) {
      s[static_cast<std::size_t>(i)] = '\1';
      --i;
    }
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
  }
}

SuiteResult start(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.passed) r.counterexample = what;
  r.passed = false;
}

State indicator(const State& x, int lo, int hi) {
  State out(x.size(), '\0');
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] >= lo && x[i] <= hi) ? 1 : 0;
  return out;
}

SuiteResult partition(const VerifyOptions& o) {
  SuiteResult r = start("partition");
  const int top = cap(o, 10);
  int checked = 0;
  for (int q = 3; q <= 6; ++q)
    for (int n = 2; n <= top; ++n) {
      const BigCount sum = z_circ(n, q);
      const BigCount closed = z_circ_closed(n, q);
      ++checked;
      if (sum != closed)
        fail(r, "Z°(" + std::to_string(n) + "," + std::to_string(q) + ") = " + sum.str() +
                    " but closed form gives " + closed.str());
    }
  r.details["cases"] = checked;
  r.details["max_n"] = top;
  return r;
}

SuiteResult mobius(const VerifyOptions& o) {
  SuiteResult r = start("mobius");
  const int top = cap(o, 8);
  std::uint64_t words = 0;
  for (int q : {3, 4})
    for (int n = 1; n <= top; ++n)
      for_each_word(n, q, [&](const Word& x) {
        ++words;
        const BigCount a = b_circ(x), b = b_circ_mobius(x);
        if (a != b) fail(r, "word " + x.str() + ": recurrence " + a.str() + ", Mobius " + b.str());
      });
  r.details["words"] = words;
  r.details["max_n"] = top;
  return r;
}

SuiteResult shift(const VerifyOptions& o) {
  SuiteResult r = start("shift");
  const int top = cap(o, 8);
  std::uint64_t words = 0;
  for (int q : {3, 4})
    for (int n = 1; n <= top; ++n)
      for_each_word(n, q, [&](const Word& x) {
        ++words;
        const BigCount base = b_circ(x);
        for (int s = 1; s < n; ++s)
          if (b_circ(rotate(x, s)) != base)
            fail(r, "word " + x.str() + " changes under rotation by " + std::to_string(s));
      });
  r.details["words"] = words;
  return r;
}

SuiteResult symmetry(const VerifyOptions& o) {
  SuiteResult r = start("symmetry");
  const int top = cap(o, 8);
  int laws = 0;
  for (int q : {3, 4})
    for (int n = 3; n <= top; ++n) {
      const ExactDist d = cycle_law(n, q);
      ++laws;
      const std::string tag = "Cycle(" + std::to_string(n) + "," + std::to_string(q) + ")";
      for (long long s = 1; s < n; ++s)
        if (!symmetry_check(d, Rotation{s})) fail(r, tag + " not invariant under rotation " + std::to_string(s));
      if (!symmetry_check(d, Reflection{})) fail(r, tag + " not invariant under reflection");
      std::vector<int> sigma(static_cast<std::size_t>(q));
      std::iota(sigma.begin(), sigma.end(), 1);
      do {
        if (!symmetry_check(d, ColorPermutation{sigma})) fail(r, tag + " not color symmetric");
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  r.details["laws"] = laws;
  return r;
}

SuiteResult restriction(const VerifyOptions& o) {
  SuiteResult r = start("restriction");
  const int top = cap(o, 8);
  nlohmann::json per_pair = nlohmann::json::array();
  for (auto [k, q] : {std::pair{1, 4}, std::pair{2, 3}}) {
    const BigCount zk = z_circ(k, q);
    std::uint64_t words = 0, mismatches = 0;
    std::string first;
    for (int n = 0; n <= top; ++n)
      for_each_word(n, q, [&](const Word& x) {
        ++words;
        const BigCount lhs = restriction_sum(x, k);
        const BigCount rhs = zk * b_vec(x);
        if (lhs != rhs) {
          if (mismatches++ == 0)
            first = "x=" + (x.empty() ? std::string("∅") : x.str()) + ", k=" + std::to_string(k) +
                    ", q=" + std::to_string(q) + ": sum " + lhs.str() + " vs Z°(k,q)·B⃗(x) = " +
                    rhs.str();
        }
      });
    if (mismatches) fail(r, first);
    per_pair.push_back({{"k", k}, {"q", q}, {"words", words}, {"mismatches", mismatches}});
  }
  r.details["pairs"] = per_pair;
  return r;
}

SuiteResult kdep(const VerifyOptions& o) {
  SuiteResult r = start("kdep");
  std::vector<std::tuple<int, int, int>> cases;  // n, q, k
  if (o.n || o.q || o.k) {
    if (!(o.n && o.q && o.k)) throw std::invalid_argument("kdep needs --n, --q and --k together");
    cases.emplace_back(*o.n, *o.q, *o.k);
  } else {
    const int top = cap(o, 9);
    for (int n = 5; n <= top; ++n) {
      cases.emplace_back(n, 3, 2);
      cases.emplace_back(n, 4, 1);
    }
  }
  nlohmann::json rows = nlohmann::json::array();
  for (auto [n, q, k] : cases) {
    const DependenceReport rep = verify_k_dependence(cycle_law(n, q), k);
    nlohmann::json row{{"n", n}, {"q", q}, {"k", k}, {"holds", rep.holds}, {"pairs", rep.pairs_checked}};
    if (rep.counterexample) {
      row["counterexample"] = {{"S1", rep.counterexample->first}, {"S2", rep.counterexample->second}};
      fail(r, "Cycle(" + std::to_string(n) + "," + std::to_string(q) + ") is not " +
                  std::to_string(k) + "-dependent: S1=" + nlohmann::json(rep.counterexample->first).dump() +
                  " S2=" + nlohmann::json(rep.counterexample->second).dump());
    }
    rows.push_back(row);
  }
  r.details["cases"] = rows;
  return r;
}

SuiteResult coupling(const VerifyOptions& o) {
  SuiteResult r = start("coupling");
  const int top = cap(o, 7);
  int cases = 0;
  for (int q : {3, 4})
    for (int n = 3; n <= top; ++n) {
      ++cases;
      const std::string tag = "(n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")";
      if (push(cycle_law(n, q), coupling_kernel(n, q)) != cycle_law(n + 1, q))
        fail(r, "coupling kernel does not carry Cycle(n) to Cycle(n+1) " + tag);
      if (!eden_vs_necklace_kernel_check(n, q)) fail(r, "Eden step differs from coupling kernel " + tag);
    }
  r.details["cases"] = cases;
  return r;
}

SuiteResult window(const VerifyOptions& o) {
  SuiteResult r = start("window");
  const int top = cap(o, 9);
  int cases = 0;
  for (auto [k, q] : {std::pair{1, 4}, std::pair{2, 3}})
    for (int m = 4; m <= top; ++m) {
      ++cases;
      IndexSet first(static_cast<std::size_t>(m - k));
      std::iota(first.begin(), first.end(), 1);
      if (marginalize(cycle_law(m, q), first) != line_window_law(m - k, k, q))
        fail(r, "window of Cycle(" + std::to_string(m) + "," + std::to_string(q) +
                    ") differs from the line law");
    }
  r.details["cases"] = cases;
  return r;
}

SuiteResult marginals(const VerifyOptions& o) {
  SuiteResult r = start("marginals");
  const auto ones_two = [](const State& x) { return indicator(x, 1, 2); };
  const auto ones = [](const State& x) { return indicator(x, 1, 1); };
  for (int n = 3; n <= cap(o, 8); ++n) {
    if (pushforward(cycle_law(n, 4), ones_two) != descent_law(n))
      fail(r, "colors {1,2} of Cycle(" + std::to_string(n) + ",4) differ from the descent law");
    if (pushforward(cycle_law(n, 3), ones) != peak_law(n))
      fail(r, "color 1 of Cycle(" + std::to_string(n) + ",3) differs from the peak law");
  }
  for (int n = 3; n <= cap(o, 9); ++n) {
    const ExactDist ones_law = pushforward(cycle_law(n, 4), ones);
    if (ones_law != bit_descent_law(n))
      fail(r, "color 1 of Cycle(" + std::to_string(n) + ",4) differs from the bit-descent law");
    if (marginalize(ones_law, {1}).probability(State{1}) != Rational(1, 4))
      fail(r, "one-site density of color 1 is not 1/4 at n=" + std::to_string(n));
  }
  for (int m = 1; m <= cap(o, 6); ++m) {
    if (pushforward(line_window_law(m, 1, 4), ones_two) != linear_descent_law(m))
      fail(r, "line window " + std::to_string(m) + ": colors {1,2} vs descents");
    if (pushforward(line_window_law(m, 2, 3), ones) != linear_peak_law(m))
      fail(r, "line window " + std::to_string(m) + ": color 1 vs peaks");
    if (pushforward(line_window_law(m, 1, 4), ones) != linear_bit_descent_law(m))
      fail(r, "line window " + std::to_string(m) + ": color 1 vs bit descents");
  }
  return r;
}

SuiteResult kernels(const VerifyOptions& o) {
  SuiteResult r = start("kernels");
  nlohmann::json rows = nlohmann::json::array();
  for (ChainVariant v : {ChainVariant::ColorsOneTwo_q4, ChainVariant::ColorOne_q3}) {
    ExactDist chain = initial_law(v);
    for (int n = 3; n <= cap(o, 8); ++n) {
      const Kernel j = j_kernel(v, n);
      const Kernel qk = q_kernel(v, n);
      const bool equal = kernel_equal(j, qk);
      Rational worst = 0;
      for (const auto& [s, row] : j.rows)
        if (qk.has_row(s)) worst = std::max(worst, tv_distance(row, qk.row(s)));
      rows.push_back({{"variant", to_string(v)}, {"n", n}, {"equal", equal}, {"tv_distance", to_string(worst)}});
      if (!equal) fail(r, "J and Q kernels differ for " + to_string(v) + " at n=" + std::to_string(n));

      const int q = colors_of(v);
      const auto f = [v](const State& x) {
        return v == ChainVariant::ColorsOneTwo_q4 ? indicator(x, 1, 2) : indicator(x, 1, 1);
      };
      if (chain != pushforward(cycle_law(n, q), f))
        fail(r, "J-chain after " + std::to_string(n - 3) + " steps differs from the coloring marginal");
      chain = push(chain, j);
    }
  }
  r.details["comparisons"] = rows;
  return r;
}

SuiteResult blockfactor(const VerifyOptions&) {
  SuiteResult r = start("blockfactor-stat");
  const IotaStatistic s = iota_two_site_statistic();
  r.details["both_star"] = to_string(s.both_star);
  r.details["two_block_factor"] = to_string(s.two_block_factor);
  r.details["single_star"] = to_string(s.single_star);
  if (s.both_star != Rational(1, 6)) fail(r, "P(X1,X2 in {3,4}) = " + to_string(s.both_star) + ", expected 1/6");
  if (s.both_star == s.two_block_factor) fail(r, "statistic coincides with the 2-block-factor value");
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"partition", "mobius",   "shift",    "symmetry",
                                              "restriction", "kdep",   "coupling", "window",
                                              "marginals", "kernels",  "blockfactor-stat"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  static const std::map<std::string, SuiteResult (*)(const VerifyOptions&)> table{
      {"partition", partition}, {"mobius", mobius},       {"shift", shift},
      {"symmetry", symmetry},   {"restriction", restriction}, {"kdep", kdep},
      {"coupling", coupling},   {"window", window},       {"marginals", marginals},
      {"kernels", kernels},     {"blockfactor-stat", blockfactor}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown verification suite: " + name);
  return it->second(options);
}

}  // namespace findep
