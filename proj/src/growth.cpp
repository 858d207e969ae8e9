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

#include "findep/growth.hpp"

#include <limits>
#include <stdexcept>

#include "findep/parallel.hpp"

namespace findep {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be positive");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;  // largest multiple of bound, minus 1
  std::uint64_t v = engine_();
  while (v > limit) v = engine_();
  return v % bound;
}

Word insert_with_rotation(const Word& x, std::size_t i, int z, long long r) {
  if (x.empty()) throw std::invalid_argument("insert_with_rotation: empty word");
  if (i < 1 || i > x.size()) throw std::out_of_range("insert_with_rotation: index out of range");
  if (z < 1 || z > x.q()) throw std::invalid_argument("insert_with_rotation: color outside [q]");
  State s = x.symbols();
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(i - 1), static_cast<char>(z));
  return rotate(Word(x.q(), std::move(s)), r);
}

std::vector<Word> cyclically_proper_words(int n, int q) {
  if (n < 0 || q < 1) throw std::invalid_argument("cyclically_proper_words: bad shape");
  std::vector<Word> out;
  State s;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(s.size()) == n) {
      if (is_cyclically_proper(s)) out.emplace_back(q, s);
      return;
    }
    for (int c = 1; c <= q; ++c) {
      if (!s.empty() && s.back() == static_cast<char>(c)) continue;
      s.push_back(static_cast<char>(c));
      self(self);
      s.pop_back();
    }
  };
  rec(rec);
  return out;
}

Kernel coupling_kernel(int n, int q) {
  if (n < 3) throw std::invalid_argument("coupling_kernel requires n >= 3");
  if (q < 3) throw std::invalid_argument("coupling_kernel requires q >= 3");
  Kernel k{static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1), {}};
  for (const Word& x : cyclically_proper_words(n, q)) {
    // x is cyclically proper, so every (I, Z, R) triple has the same
    // probability 1 / (n (q-2) (n+1)) and raw counts suffice.
    WeightMap counts;
    for (int i = 1; i <= n; ++i) {
      const int left = x[static_cast<std::size_t>((i - 2 + n) % n)];
      const int right = x[static_cast<std::size_t>(i - 1)];
      for (int z = 1; z <= q; ++z) {
        if (z == left || z == right) continue;
        for (int r = 1; r <= n + 1; ++r)
          counts[insert_with_rotation(x, static_cast<std::size_t>(i), z, r).symbols()] += 1;
      }
    }
    k.rows.emplace(x.symbols(), ExactDist::from_weights(std::move(counts)));
  }
  return k;
}

Word necklace_sample(int n, int q, RngStream& rng) {
  if (n < 3) throw std::invalid_argument("necklace_sample requires n >= 3");
  if (q < 3) throw std::invalid_argument("necklace_sample requires q >= 3");
  const auto uq = static_cast<std::uint64_t>(q);
  // Three distinct colors, uniformly: pick a, then b != a, then c not in {a, b}.
  const int a = static_cast<int>(rng.below(uq)) + 1;
  int b = static_cast<int>(rng.below(uq - 1)) + 1;
  if (b >= a) ++b;
  int c = static_cast<int>(rng.below(uq - 2)) + 1;
  for (int used : {std::min(a, b), std::max(a, b)})
    if (c >= used) ++c;
  Word x(q, {a, b, c});
  for (int len = 3; len < n; ++len) {
    const auto i = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(len))) + 1;
    const int left = x[(i + static_cast<std::size_t>(len) - 2) % static_cast<std::size_t>(len)];
    const int right = x[i - 1];
    // q - 2 legal colors; skip the two neighbor colors in increasing order.
    int z = static_cast<int>(rng.below(uq - 2)) + 1;
    for (int used : {std::min(left, right), std::max(left, right)})
      if (z >= used) ++z;
    const auto r = static_cast<long long>(rng.below(static_cast<std::uint64_t>(len + 1))) + 1;
    x = insert_with_rotation(x, i, z, r);
  }
  return x;
}

std::vector<Word> sample_replicates(const std::function<Word(RngStream&)>& draw, std::size_t reps,
                                    std::uint64_t seed, unsigned threads) {
  std::vector<Word> out(reps);
  parallel_for(reps, threads, [&](std::size_t i) {
    RngStream rng(seed, i);
    out[i] = draw(rng);
  });
  return out;
}

}  // namespace findep
