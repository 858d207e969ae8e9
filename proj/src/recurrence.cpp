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

#include "findep/recurrence.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "findep/parallel.hpp"

namespace findep {

namespace detail {

namespace {

using u128 = unsigned __int128;

u128 nibble_mask(std::size_t len) {
  return len == 0 ? u128{0} : ((u128{1} << (4 * len)) - 1);
}

int symbol(const PackedWord& w, std::size_t i) {
  return static_cast<int>((w.bits >> (4 * (w.length - 1 - i))) & 0xF);
}

PackedWord rotate_left(const PackedWord& w, std::size_t r) {
  if (r == 0 || w.length == 0) return w;
  const std::size_t len = w.length;
  const u128 bits = ((w.bits << (4 * r)) | (w.bits >> (4 * (len - r)))) & nibble_mask(len);
  return {bits, w.length};
}

PackedWord erase(const PackedWord& w, std::size_t i) {
  const std::size_t shift = 4 * (w.length - 1 - i);
  const u128 lower = w.bits & ((u128{1} << shift) - 1);
  const u128 upper = w.bits >> (shift + 4);
  return {(upper << shift) | lower, static_cast<std::uint8_t>(w.length - 1)};
}

PackedWord append(const PackedWord& w, int s) {
  return {(w.bits << 4) | static_cast<u128>(s), static_cast<std::uint8_t>(w.length + 1)};
}

bool proper(const PackedWord& w) {
  for (std::size_t i = 1; i < w.length; ++i)
    if (symbol(w, i) == symbol(w, i - 1)) return false;
  return true;
}

bool cyclically_proper(const PackedWord& w) {
  if (w.length <= 1) return true;
  return proper(w) && symbol(w, 0) != symbol(w, w.length - 1);
}

// First-occurrence relabeling: the first distinct symbol becomes 1, the
// second 2, and so on.
PackedWord relabel(const PackedWord& w) {
  std::array<int, 16> label{};
  int next = 0;
  PackedWord out{0, 0};
  for (std::size_t i = 0; i < w.length; ++i) {
    const int s = symbol(w, i);
    if (label[static_cast<std::size_t>(s)] == 0) label[static_cast<std::size_t>(s)] = ++next;
    out = append(out, label[static_cast<std::size_t>(s)]);
  }
  return out;
}

PackedWord cycle_key(const PackedWord& w, bool colors) {
  PackedWord best = colors ? relabel(w) : w;
  for (std::size_t r = 1; r < w.length; ++r) {
    PackedWord cand = rotate_left(w, r);
    if (colors) cand = relabel(cand);
    if (cand.bits < best.bits) best = cand;
  }
  return best;
}

PackedWord pack(const Word& x) {
  if (x.size() > kMaxMemoLength)
    throw std::invalid_argument("word longer than " + std::to_string(kMaxMemoLength) +
                                " symbols is not supported by the recurrence engine");
  if (x.q() > kMaxMemoColors)
    throw std::invalid_argument("alphabets larger than " + std::to_string(kMaxMemoColors) +
                                " colors are not supported by the recurrence engine");
  PackedWord w{0, 0};
  for (std::size_t i = 0; i < x.size(); ++i) w = append(w, x[i]);
  return w;
}

void check_shape(int n, int q) {
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
  if (static_cast<std::size_t>(n) > kMaxMemoLength)
    throw std::invalid_argument("length exceeds " + std::to_string(kMaxMemoLength));
  if (q < 1 || q > kMaxMemoColors)
    throw std::invalid_argument("q must lie in [1, " + std::to_string(kMaxMemoColors) + "]");
}

State to_state(const PackedWord& w) {
  State s(w.length, '\0');
  for (std::size_t i = 0; i < w.length; ++i) s[i] = static_cast<char>(symbol(w, i));
  return s;
}

}  // namespace

std::size_t PackedWordHash::operator()(const PackedWord& w) const noexcept {
  // splitmix64 finalizer over both halves and the length
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  const auto lo = static_cast<std::uint64_t>(w.bits);
  const auto hi = static_cast<std::uint64_t>(w.bits >> 64);
  return static_cast<std::size_t>(mix(lo ^ mix(hi ^ mix(w.length))));
}

bool CountTable::find(const PackedWord& key, BigCount& out) const {
  const Shard& shard = shards_[PackedWordHash{}(key) % kShards];
  std::lock_guard lock(shard.mutex);
  auto it = shard.map.find(key);
  if (it == shard.map.end()) return false;
  out = it->second;
  return true;
}

void CountTable::insert(const PackedWord& key, const BigCount& value) {
  Shard& shard = shards_[PackedWordHash{}(key) % kShards];
  std::lock_guard lock(shard.mutex);
  shard.map.emplace(key, value);
}

std::size_t CountTable::size() const {
  std::size_t total = 0;
  for (const auto& shard : shards_) {
    std::lock_guard lock(shard.mutex);
    total += shard.map.size();
  }
  return total;
}

void CountTable::clear() {
  for (auto& shard : shards_) {
    std::lock_guard lock(shard.mutex);
    shard.map.clear();
  }
}

}  // namespace detail

using detail::PackedWord;

RecurrenceEngine::RecurrenceEngine(RecurrenceOptions options) : options_(options) {}

BigCount RecurrenceEngine::cycle_deletion_sum(const PackedWord& w) {
  BigCount sum = 0;
  for (std::size_t i = 0; i < w.length; ++i) sum += cycle_count(detail::erase(w, i));
  return sum;
}

BigCount RecurrenceEngine::cycle_count(const PackedWord& w) {
  if (w.length <= 1) return 1;
  if (!detail::cyclically_proper(w)) return 0;
  const PackedWord key = detail::cycle_key(w, options_.canonicalize_colors);
  BigCount value;
  if (cycle_table_.find(key, value)) return value;
  value = cycle_deletion_sum(key);
  cycle_table_.insert(key, value);
  return value;
}

BigCount RecurrenceEngine::line_count(const PackedWord& w) {
  if (w.length <= 1) return 1;
  if (!detail::proper(w)) return 0;
  const PackedWord key = options_.canonicalize_colors ? detail::relabel(w) : w;
  BigCount value;
  if (line_table_.find(key, value)) return value;
  value = 0;
  for (std::size_t i = 0; i < key.length; ++i) value += line_count(detail::erase(key, i));
  line_table_.insert(key, value);
  return value;
}

BigCount RecurrenceEngine::mobius_count(const PackedWord& w) {
  if (w.length == 0) return 1;
  BigCount value;
  if (mobius_table_.find(w, value)) return value;
  const std::size_t n = w.length;
  std::vector<BigCount> deleted(n);
  BigCount sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    deleted[i] = mobius_count(detail::erase(w, i));
    sum += deleted[i];
  }
  // Edges {i, i+1 mod n} of the simple cycle graph C_n.
  const std::size_t edges = n == 1 ? 0 : (n == 2 ? 1 : n);
  BigCount clash = 0;
  for (std::size_t i = 0; i < edges; ++i)
    if (detail::symbol(w, i) == detail::symbol(w, (i + 1) % n)) clash += deleted[i];
  value = sum - 2 * clash;
  mobius_table_.insert(w, value);
  return value;
}

BigCount RecurrenceEngine::b_circ(const Word& x) { return cycle_count(detail::pack(x)); }

BigCount RecurrenceEngine::b_vec(const Word& x) { return line_count(detail::pack(x)); }

BigCount RecurrenceEngine::b_circ_mobius(const Word& x) {
  if (x.empty()) throw std::invalid_argument("b_circ_mobius: defined for n >= 1");
  return mobius_count(detail::pack(x));
}

void RecurrenceEngine::check_budget(int n, int q) const {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > options_.enumeration_budget / static_cast<std::uint64_t>(q)) {
      throw BudgetExceeded("enumerating " + std::to_string(q) + "^" + std::to_string(n) +
                           " words exceeds the budget of " +
                           std::to_string(options_.enumeration_budget));
    }
    total *= static_cast<std::uint64_t>(q);
  }
}

// Visits every proper word of length n (cyclically proper when `cyclic`),
// split into q tasks by leading symbol. visit(task, packed_word) is called
// from the task's worker only.
template <typename Visit>
void RecurrenceEngine::enumerate_words(int n, int q, bool cyclic, Visit&& visit) {
  if (n == 0) {
    visit(std::size_t{0}, PackedWord{0, 0});
    return;
  }
  parallel_for(static_cast<std::size_t>(q), options_.threads, [&](std::size_t task) {
    const int first = static_cast<int>(task) + 1;
    std::vector<PackedWord> stack{PackedWord{static_cast<unsigned __int128>(first), 1}};
    while (!stack.empty()) {
      const PackedWord w = stack.back();
      stack.pop_back();
      const int last = static_cast<int>(w.bits & 0xF);
      if (w.length == n) {
        if (!cyclic || n == 1 || last != first) visit(task, w);
        continue;
      }
      for (int c = q; c >= 1; --c)
        if (c != last) stack.push_back(detail::append(w, c));
    }
  });
}

BigCount RecurrenceEngine::z_circ(int n, int q) {
  detail::check_shape(n, q);
  if (n == 0) return 1;
  std::vector<BigCount> partial(static_cast<std::size_t>(q));
  enumerate_words(n, q, true, [&](std::size_t task, const PackedWord& w) {
    partial[task] += n == 1 ? BigCount(1) : cycle_deletion_sum(w);
  });
  BigCount total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

BigCount RecurrenceEngine::z_vec(int n, int q) {
  detail::check_shape(n, q);
  if (n == 0) return 1;
  std::vector<BigCount> partial(static_cast<std::size_t>(q));
  enumerate_words(n, q, false, [&](std::size_t task, const PackedWord& w) {
    partial[task] += line_count(w);
  });
  BigCount total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

BigCount RecurrenceEngine::restriction_sum(const Word& x, int k) {
  if (k < 0) throw std::invalid_argument("restriction_sum: k must be nonnegative");
  detail::check_shape(static_cast<int>(x.size()) + k, x.q());
  const PackedWord prefix = detail::pack(x);
  BigCount total = 0;
  std::vector<PackedWord> stack{prefix};
  while (!stack.empty()) {
    const PackedWord w = stack.back();
    stack.pop_back();
    if (w.length == prefix.length + k) {
      total += cycle_count(w);
      continue;
    }
    for (int c = 1; c <= x.q(); ++c) stack.push_back(detail::append(w, c));
  }
  return total;
}

ExactDist RecurrenceEngine::cycle_law(int n, int q) {
  detail::check_shape(n, q);
  if (q < 3) throw std::invalid_argument("cycle_law requires q >= 3");
  check_budget(n, q);
  std::vector<WeightMap> partial(static_cast<std::size_t>(q));
  enumerate_words(n, q, true, [&](std::size_t task, const PackedWord& w) {
    BigCount b = n <= 1 ? BigCount(1) : cycle_deletion_sum(w);
    if (b != 0) partial[task].emplace(detail::to_state(w), std::move(b));
  });
  WeightMap all;
  for (auto& p : partial) all.merge(p);
  return ExactDist::from_weights(std::move(all));
}

ExactDist RecurrenceEngine::line_window_law(int n, int k, int q) {
  detail::check_shape(n, q);
  if (q < 3) throw std::invalid_argument("line_window_law requires q >= 3");
  if (k < 1) throw std::invalid_argument("line_window_law requires k >= 1");
  check_budget(n, q);
  std::vector<WeightMap> partial(static_cast<std::size_t>(q));
  enumerate_words(n, q, false, [&](std::size_t task, const PackedWord& w) {
    BigCount b = line_count(w);
    if (b != 0) partial[task].emplace(detail::to_state(w), std::move(b));
  });
  WeightMap all;
  for (auto& p : partial) all.merge(p);
  return ExactDist::from_weights(std::move(all));
}

BigCount z_circ_closed(int n, int q) {
  if (n < 2) throw std::invalid_argument("closed form for Z° holds for n >= 2 only");
  BigCount v = BigCount(q) * (q - 1);
  for (int i = 2; i <= n; ++i) v *= i;
  for (int i = 0; i < n - 2; ++i) v *= (q - 2);
  return v;
}

bool defines_coloring(int k, int q) { return (k == 1 && q == 4) || (k == 2 && q == 3); }

RecurrenceEngine& default_engine() {
  static RecurrenceEngine engine;
  return engine;
}

BigCount b_circ(const Word& x) { return default_engine().b_circ(x); }
BigCount b_circ_mobius(const Word& x) { return default_engine().b_circ_mobius(x); }
BigCount b_vec(const Word& x) { return default_engine().b_vec(x); }
BigCount z_circ(int n, int q) { return default_engine().z_circ(n, q); }
ExactDist cycle_law(int n, int q) { return default_engine().cycle_law(n, q); }
ExactDist line_window_law(int n, int k, int q) { return default_engine().line_window_law(n, k, q); }
BigCount restriction_sum(const Word& x, int k) { return default_engine().restriction_sum(x, k); }

}  // namespace findep
