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
#include <random>
#include <vector>

#include "findep/kernel.hpp"
#include "findep/word.hpp"

namespace findep {

/// Deterministic random stream identified by (seed, stream). Equal
/// identifiers give equal draw sequences on every platform: the engine and
/// std::seed_seq are fully specified, and bounded draws use our own
/// rejection step rather than the implementation-defined std distributions.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// Inserts z just before 1-based position i, giving
/// (x_1, ..., x_{i-1}, z, x_i, ..., x_n), then applies the rotation
/// (y_1, ..., y_{n+1}) -> (y_{r+1}, ..., y_{r+n+1}). r is reduced mod n+1.
/// Throws std::out_of_range unless 1 <= i <= n, std::invalid_argument for an
/// empty x or a color outside [q].
Word insert_with_rotation(const Word& x, std::size_t i, int z, long long r);

/// Every cyclically proper word of length n over [q], ascending.
std::vector<Word> cyclically_proper_words(int n, int q);

/// Exact law of the necklace insertion step from each cyclically proper word
/// of length n: I uniform in [n], Z uniform in [q] \ {x_{I-1}, x_I}
/// (cyclic), R uniform in [n+1], successor insert_with_rotation(x, I, Z, R).
/// Requires n >= 3 and q >= 3.
Kernel coupling_kernel(int n, int q);

/// Random proper q-coloring of the n-cycle by necklace insertion: three
/// beads with distinct uniform colors, then n - 3 insertion steps each
/// followed by a uniform rotation. Requires n >= 3, q >= 3.
Word necklace_sample(int n, int q, RngStream& rng);

/// Draws `reps` samples, replicate i from RngStream(seed, i). The output is
/// independent of `threads`.
std::vector<Word> sample_replicates(const std::function<Word(RngStream&)>& draw, std::size_t reps,
                                    std::uint64_t seed, unsigned threads = 0);

}  // namespace findep
