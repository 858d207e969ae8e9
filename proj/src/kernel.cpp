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

#include "findep/kernel.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace findep {

const ExactDist& Kernel::row(const State& s) const {
  auto it = rows.find(s);
  if (it == rows.end()) throw std::invalid_argument("kernel has no row for state " + format_state(s));
  return it->second;
}

ExactDist push(const ExactDist& d, const Kernel& k) {
  std::vector<std::pair<Rational, const ExactDist*>> parts;
  parts.reserve(d.support_size());
  for (const auto& [s, w] : d.weights()) parts.emplace_back(Rational(w, d.total()), &k.row(s));
  return mix(parts);
}

bool kernel_equal(const Kernel& a, const Kernel& b) {
  if (a.from_length != b.from_length || a.to_length != b.to_length)
    throw std::invalid_argument("kernel_equal: kernels act on different state spaces");
  return a.rows == b.rows;
}

}  // namespace findep
