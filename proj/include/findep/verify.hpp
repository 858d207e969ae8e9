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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace findep {

/// Bounds for a verification run. max_n caps every suite's largest size;
/// the kdep suite alone can instead target a single (n, q, k).
struct VerifyOptions {
  std::optional<int> max_n;
  std::optional<int> n;
  std::optional<int> q;
  std::optional<int> k;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  nlohmann::json details = nlohmann::json::object();
  /// Human-readable first failure, empty on success.
  std::string counterexample;
};

/// partition, mobius, shift, symmetry, restriction, kdep, coupling, window,
/// marginals, kernels, blockfactor-stat.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace findep
