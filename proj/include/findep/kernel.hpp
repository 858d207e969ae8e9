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

#include <cstddef>
#include <map>

#include "findep/exact.hpp"

namespace findep {

/// Exact one-step transition law from states of length `from_length` to
/// states of length `to_length`, one row per state in its state space.
struct Kernel {
  std::size_t from_length = 0;
  std::size_t to_length = 0;
  std::map<State, ExactDist> rows;

  const ExactDist& row(const State& s) const;
  bool has_row(const State& s) const { return rows.count(s) != 0; }
};

/// Law of the successor when the current state has law d. Throws
/// std::invalid_argument if some state in the support of d has no row.
ExactDist push(const ExactDist& d, const Kernel& k);

/// Row-by-row exact equality. Kernels over different state lengths are a
/// usage error (std::invalid_argument); kernels over the same lengths but
/// different row sets compare unequal.
bool kernel_equal(const Kernel& a, const Kernel& b);

}  // namespace findep
