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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "findep/analysis.hpp"
#include "findep/chains.hpp"
#include "findep/eden.hpp"
#include "findep/growth.hpp"
#include "findep/recurrence.hpp"

using namespace findep;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;
};

void check(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) o.note = what;
  o.pass = o.pass && ok;
}

void for_each_word(int n, int q, const std::function<void(const Word&)>& f) {
  State s(static_cast<std::size_t>(n), '\1');
  while (true) {
    f(Word(q, s));
    int i = n - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == static_cast<char>(q)) s[static_cast<std::size_t>(i--)] = '\1';
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
  }
}

State indicator(const State& x, int hi) {
  State out(x.size(), '\0');
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] >= 1 && x[i] <= hi;
  return out;
}

int failures = 0;

void criterion(int id, const std::string& title, std::optional<double> limit_seconds,
               const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_seconds && secs > *limit_seconds) {
    std::ostringstream os;
    os << "took " << secs << " s, limit " << *limit_seconds << " s";
    check(o, false, os.str());
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.note.empty() ? "" : " :: ", o.note.c_str());
  std::fflush(stdout);
}

Outcome partition_closed_form() {
  Outcome o;
  for (int q = 3; q <= 6; ++q)
    for (int n = 2; n <= 10; ++n)
      check(o, z_circ(n, q) == z_circ_closed(n, q), "n=" + std::to_string(n) + " q=" + std::to_string(q));
  return o;
}

Outcome mobius_equivalence() {
  Outcome o;
  for (int q : {3, 4})
    for (int n = 1; n <= 8; ++n)
      for_each_word(n, q, [&](const Word& x) { check(o, b_circ_mobius(x) == b_circ(x), "word " + x.str()); });
  return o;
}

Outcome symmetries() {
  Outcome o;
  for (int q : {3, 4})
    for (int n = 3; n <= 8; ++n) {
      const ExactDist d = cycle_law(n, q);
      const std::string tag = "n=" + std::to_string(n) + " q=" + std::to_string(q);
      for (long long r = 1; r < n; ++r) check(o, symmetry_check(d, Rotation{r}), "rotation " + tag);
      check(o, symmetry_check(d, Reflection{}), "reflection " + tag);
      std::vector<int> sigma(static_cast<std::size_t>(q));
      std::iota(sigma.begin(), sigma.end(), 1);
      do check(o, symmetry_check(d, ColorPermutation{sigma}), "colors " + tag);
      while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  return o;
}

Outcome restriction_identity() {
  Outcome o;
  for (auto [k, q] : {std::pair{1, 4}, std::pair{2, 3}}) {
    const BigCount z = z_circ(k, q);
    std::uint64_t bad = 0, words = 0;
    std::string first;
    // Diagnostic only: for nonempty x, is the sum proportional to the line count?
    std::optional<Rational> ratio;
    bool proportional = true;
    for (int n = 0; n <= 8; ++n)
      for_each_word(n, q, [&](const Word& x) {
        ++words;
        const BigCount lhs = restriction_sum(x, k), line = b_vec(x);
        if (lhs != z * line && bad++ == 0)
          first = "x=" + (x.empty() ? std::string("(empty)") : x.str()) + ": " + lhs.str() + " vs " +
                  BigCount(z * line).str();
        if (x.empty()) return;
        if (line == 0) {
          proportional = proportional && lhs == 0;
        } else {
          const Rational r(lhs, line);
          if (!ratio) ratio = r;
          proportional = proportional && r == *ratio;
        }
      });
    const std::string tag = "(k,q)=(" + std::to_string(k) + "," + std::to_string(q) + ")";
    std::cout << "      " << tag << ": " << bad << " of " << words << " words differ";
    if (bad) std::cout << ", first " << first;
    std::cout << "; for nonempty x, sum/line count is "
              << (proportional && ratio ? "constant " + to_string(*ratio) : "not constant")
              << " vs Z = " << z.str() << "\n";
    check(o, bad == 0, tag + " " + first);
  }
  return o;
}

Outcome window_equality() {
  Outcome o;
  for (auto [k, q] : {std::pair{1, 4}, std::pair{2, 3}})
    for (int m = 4; m <= 9; ++m) {
      IndexSet first(static_cast<std::size_t>(m - k));
      std::iota(first.begin(), first.end(), 1);
      check(o, marginalize(cycle_law(m, q), first) == line_window_law(m - k, k, q),
            "m=" + std::to_string(m) + " q=" + std::to_string(q));
    }
  return o;
}

Outcome k_dependence() {
  Outcome o;
  for (int n = 5; n <= 9; ++n) {
    check(o, verify_k_dependence(cycle_law(n, 3), 2).holds, "q=3 k=2 n=" + std::to_string(n));
    check(o, verify_k_dependence(cycle_law(n, 4), 1).holds, "q=4 k=1 n=" + std::to_string(n));
  }
  const DependenceReport sanity = verify_k_dependence(cycle_law(5, 3), 1);
  check(o, !sanity.holds && sanity.counterexample.has_value(), "Cycle(5,3) passed as 1-dependent");
  if (sanity.counterexample) {
    const auto& [a, b] = *sanity.counterexample;
    std::cout << "      Cycle(5,3) is not 1-dependent: S1={" << a[0] << (a.size() > 1 ? ",..." : "") << "} S2={"
              << b[0] << (b.size() > 1 ? ",..." : "") << "}\n";
  }
  return o;
}

Outcome coupling_transport() {
  Outcome o;
  for (int q : {3, 4})
    for (int n = 3; n <= 7; ++n) {
      const std::string tag = "n=" + std::to_string(n) + " q=" + std::to_string(q);
      check(o, push(cycle_law(n, q), coupling_kernel(n, q)) == cycle_law(n + 1, q), "transport " + tag);
      check(o, eden_vs_necklace_kernel_check(n, q), "eden " + tag);
    }
  return o;
}

Outcome descents() {
  Outcome o;
  for (int n = 3; n <= 8; ++n)
    check(o, pushforward(cycle_law(n, 4), [](const State& x) { return indicator(x, 2); }) == descent_law(n),
          "n=" + std::to_string(n));
  const ExactDist d3 = descent_law(3);
  bool uniform = d3.support_size() == 6;
  for (const auto& s : d3.support()) {
    const auto ones = std::count(s.begin(), s.end(), '\1');
    uniform = uniform && (ones == 1 || ones == 2) && d3.probability(s) == Rational(1, 6);
  }
  check(o, uniform, "n=3 law is not uniform on weight-1/2 vectors");
  return o;
}

Outcome peaks() {
  Outcome o;
  for (int n = 3; n <= 8; ++n)
    check(o, pushforward(cycle_law(n, 3), [](const State& x) { return indicator(x, 1); }) == peak_law(n),
          "n=" + std::to_string(n));
  check(o, peak_law(3) == ExactDist::uniform({State{1, 0, 0}, State{0, 1, 0}, State{0, 0, 1}}),
        "n=3 law is not uniform on singletons");
  return o;
}

Outcome bit_descents() {
  Outcome o;
  for (int n = 3; n <= 9; ++n) {
    const ExactDist ones = pushforward(cycle_law(n, 4), [](const State& x) { return indicator(x, 1); });
    check(o, ones == bit_descent_law(n), "n=" + std::to_string(n));
    check(o, marginalize(ones, {1}).probability(State{1}) == Rational(1, 4), "density n=" + std::to_string(n));
  }
  return o;
}

Outcome kernel_equality() {
  Outcome o;
  for (ChainVariant v : {ChainVariant::ColorsOneTwo_q4, ChainVariant::ColorOne_q3})
    for (int n = 3; n <= 8; ++n)
      check(o, kernel_equal(j_kernel(v, n), q_kernel(v, n)), to_string(v) + " n=" + std::to_string(n));
  return o;
}

Outcome block_factor() {
  Outcome o;
  const IotaStatistic s = iota_two_site_statistic();
  std::cout << "      P(X1,X2 in {3,4}) = " << to_string(s.both_star) << ", 2-block-factor value "
            << to_string(s.two_block_factor) << "\n";
  check(o, s.both_star == Rational(1, 6), "statistic " + to_string(s.both_star));
  check(o, s.both_star != Rational(1, 4), "statistic equals 1/4");
  return o;
}

constexpr std::uint64_t kNecklaceSeed = 20260101;
constexpr std::uint64_t kEdenSeed = 20260102;

Outcome sampler_fit(const std::string& model, int n, int q) {
  Outcome o;
  const std::uint64_t seed = model == "necklace" ? kNecklaceSeed : kEdenSeed;
  std::function<Word(RngStream&)> draw;
  if (model == "necklace")
    draw = [n, q](RngStream& r) { return necklace_sample(n, q, r); };
  else
    draw = [n, q](RngStream& r) { return eden_sample(n, q, r); };
  std::map<State, std::uint64_t> counts;
  for (const Word& x : sample_replicates(draw, 100000, seed)) ++counts[x.symbols()];
  const GofReport rep = chi_square_gof(counts, cycle_law(n, q), 0.001);
  std::ostringstream os;
  os << "p=" << rep.p_value << " dof=" << rep.dof;
  o.note = os.str();
  o.pass = rep.pass;
  return o;
}

}  // namespace

int main() {
  std::cout << "findep acceptance run\n";
  criterion(1, "partition closed form, n in [2,10], q in [3,6]", 60, partition_closed_form);
  criterion(2, "Mobius form equals recurrence, n in [1,8], q in {3,4}", 60, mobius_equivalence);
  criterion(3, "rotation, reflection and color symmetry of the cycle law", std::nullopt, symmetries);
  criterion(4, "restriction identity, n <= 8, (k,q) in {(1,4),(2,3)}", std::nullopt, restriction_identity);
  criterion(5, "window of the cycle law equals the line window law", std::nullopt, window_equality);
  criterion(6, "k-dependence of the cycle laws, n in [5,9]", 300, k_dependence);
  criterion(7, "coupling kernel transport and Eden step agreement", std::nullopt, coupling_transport);
  criterion(8, "colors {1,2} of the 4-coloring are the descent set", std::nullopt, descents);
  criterion(9, "color 1 of the 3-coloring is the peak set", std::nullopt, peaks);
  criterion(10, "color 1 of the 4-coloring is the bit-descent set", std::nullopt, bit_descents);
  criterion(11, "J and Q insertion kernels coincide", std::nullopt, kernel_equality);
  criterion(12, "two-site block-factor statistic", std::nullopt, block_factor);
  int sub = 0;
  for (const std::string model : {"necklace", "eden"}) {
    for (auto [n, q] : {std::pair{5, 3}, std::pair{6, 3}, std::pair{7, 3}, std::pair{5, 4}, std::pair{6, 4}}) {
      ++sub;
      criterion(13, model + " sampler fit, n=" + std::to_string(n) + " q=" + std::to_string(q), 120,
                [&, n = n, q = q] { return sampler_fit(model, n, q); });
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " check(s) failed") << "\n";
  return failures == 0 ? 0 : 1;
}
