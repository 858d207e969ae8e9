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

#include "findep/exact.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace findep {

namespace bmp = boost::multiprecision;

std::string to_decimal(const BigCount& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (bmp::denominator(r) == 1) return bmp::numerator(r).str();
  return bmp::numerator(r).str() + "/" + bmp::denominator(r).str();
}

ExactDist ExactDist::from_weights(WeightMap weights) {
  ExactDist d;
  BigCount g = 0;
  for (auto it = weights.begin(); it != weights.end();) {
    if (it->second < 0) throw std::invalid_argument("negative weight");
    if (it->second == 0) {
      it = weights.erase(it);
      continue;
    }
    g = g == 0 ? it->second : bmp::gcd(g, it->second);
    ++it;
  }
  if (weights.empty()) throw std::invalid_argument("distribution has no mass");
  for (auto& [s, w] : weights) {
    if (g != 1) w /= g;
    d.total_ += w;
  }
  d.weights_ = std::move(weights);
  return d;
}

ExactDist ExactDist::from_probabilities(const std::map<State, Rational>& probs) {
  Rational sum = 0;
  BigCount lcm = 1;
  for (const auto& [s, p] : probs) {
    if (p < 0) throw std::invalid_argument("negative probability");
    sum += p;
    lcm = bmp::lcm(lcm, bmp::denominator(p));
  }
  if (sum != 1) throw std::invalid_argument("probabilities do not sum to 1");
  WeightMap w;
  for (const auto& [s, p] : probs) w[s] = bmp::numerator(p) * (lcm / bmp::denominator(p));
  return from_weights(std::move(w));
}

ExactDist ExactDist::point_mass(const State& s) { return from_weights({{s, BigCount(1)}}); }

ExactDist ExactDist::uniform(const std::vector<State>& states) {
  WeightMap w;
  for (const auto& s : states) w[s] = 1;
  if (w.size() != states.size()) throw std::invalid_argument("uniform: duplicate states");
  return from_weights(std::move(w));
}

Rational ExactDist::probability(const State& s) const {
  auto it = weights_.find(s);
  if (it == weights_.end()) return Rational(0);
  return Rational(it->second, total_);
}

BigCount ExactDist::weight(const State& s) const {
  auto it = weights_.find(s);
  return it == weights_.end() ? BigCount(0) : it->second;
}

std::vector<State> ExactDist::support() const {
  std::vector<State> out;
  out.reserve(weights_.size());
  for (const auto& [s, w] : weights_) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const State& a, const State& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](char x, char y) {
                                          return static_cast<unsigned char>(x) <
                                                 static_cast<unsigned char>(y);
                                        });
  });
  return out;
}

std::size_t ExactDist::state_length() const {
  if (weights_.empty()) throw std::logic_error("empty distribution");
  const std::size_t len = weights_.begin()->first.size();
  for (const auto& [s, w] : weights_)
    if (s.size() != len) throw std::logic_error("states of mixed length");
  return len;
}

ExactDist mix(const std::vector<std::pair<Rational, const ExactDist*>>& parts) {
  BigCount lcm = 1;
  Rational sum = 0;
  for (const auto& [c, d] : parts) {
    if (c < 0) throw std::invalid_argument("mix: negative coefficient");
    sum += c;
    if (c == 0) continue;
    lcm = bmp::lcm(lcm, bmp::denominator(c) * d->total());
  }
  if (sum != 1) throw std::invalid_argument("mix: coefficients must sum to 1");
  WeightMap out;
  for (const auto& [c, d] : parts) {
    if (c == 0) continue;
    // c * w / total, scaled by lcm; exact because denominator(c)*total | lcm.
    const BigCount scale = bmp::numerator(c) * (lcm / (bmp::denominator(c) * d->total()));
    for (const auto& [s, w] : d->weights()) out[s] += w * scale;
  }
  return ExactDist::from_weights(std::move(out));
}

std::string to_json(const ExactDist& d) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : d.support()) {
    const Rational p = d.probability(s);
    arr.push_back({{"state", format_state(s)},
                   {"num", bmp::numerator(p).str()},
                   {"den", bmp::denominator(p).str()}});
  }
  return arr.dump();
}

ExactDist exact_dist_from_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array");
  std::map<State, Rational> probs;
  for (const auto& e : arr) {
    const State s = parse_state(e.at("state").get<std::string>());
    const Rational p(BigCount(e.at("num").get<std::string>()),
                     BigCount(e.at("den").get<std::string>()));
    if (!probs.emplace(s, p).second) throw std::invalid_argument("duplicate state in JSON");
  }
  return ExactDist::from_probabilities(probs);
}

std::string to_csv(const ExactDist& d) {
  std::ostringstream os;
  os << "state,num,den\n";
  for (const auto& s : d.support()) {
    const Rational p = d.probability(s);
    const std::string text = format_state(s);
    // Comma-separated states are quoted to keep the CSV well formed.
    if (text.find(',') != std::string::npos)
      os << '"' << text << '"';
    else
      os << text;
    os << ',' << bmp::numerator(p) << ',' << bmp::denominator(p) << '\n';
  }
  return os.str();
}

}  // namespace findep
