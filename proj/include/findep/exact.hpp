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
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "findep/word.hpp"

namespace findep {

/// Arbitrary-precision nonnegative integer (sign unused).
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an exhaustive enumeration would exceed its configured size.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_decimal(const BigCount& v);
std::string to_string(const Rational& r);  // "num/den", or "num" when den == 1

using WeightMap = std::unordered_map<State, BigCount>;

/// Finite probability law over states with exact rational probabilities.
///
/// Stored as positive integer weights whose gcd is 1, so that
/// P(s) = weight(s) / total(). That representation is unique for a given
/// law, hence operator== is equality in law. States of zero weight are
/// never stored.
class ExactDist {
 public:
  ExactDist() = default;

  /// Normalizes arbitrary nonnegative weights. Zero entries are dropped.
  /// Throws std::invalid_argument if every weight is zero or any is negative.
  static ExactDist from_weights(WeightMap weights);

  /// Throws std::invalid_argument unless the probabilities are nonnegative
  /// and sum to exactly 1.
  static ExactDist from_probabilities(const std::map<State, Rational>& probs);

  static ExactDist point_mass(const State& s);

  /// Uniform law on the given (distinct) states.
  static ExactDist uniform(const std::vector<State>& states);

  Rational probability(const State& s) const;
  BigCount weight(const State& s) const;
  const BigCount& total() const { return total_; }
  const WeightMap& weights() const { return weights_; }

  std::size_t support_size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  bool contains(const State& s) const { return weights_.count(s) != 0; }

  /// Support in ascending order of the raw symbols.
  std::vector<State> support() const;

  /// Length shared by every state; throws if lengths are mixed or empty law.
  std::size_t state_length() const;

  friend bool operator==(const ExactDist& a, const ExactDist& b) {
    return a.total_ == b.total_ && a.weights_ == b.weights_;
  }

 private:
  WeightMap weights_;
  BigCount total_ = 0;
};

/// Mixes laws with rational coefficients summing to 1.
ExactDist mix(const std::vector<std::pair<Rational, const ExactDist*>>& parts);

/// JSON: array of {"state", "num", "den"} sorted by state.
std::string to_json(const ExactDist& d);
ExactDist exact_dist_from_json(const std::string& text);

/// CSV with header "state,num,den".
std::string to_csv(const ExactDist& d);

}  // namespace findep
