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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace findep {

/// Raw symbol string: one byte per symbol, holding the symbol's numeric
/// value (not its ASCII digit). Used as the key type of every exact law,
/// for colored words (symbols 1..q) and binary vectors (symbols 0/1) alike.
using State = std::string;

/// Renders a state as digits when every symbol is at most 9, otherwise as
/// comma-separated integers. The empty state renders as "".
std::string format_state(const State& s);

/// Renders a state with an explicit choice of form.
std::string format_state(const State& s, bool digits);

/// Parses the text form produced by format_state. A string containing a
/// comma is read as comma-separated integers, otherwise as digits.
State parse_state(std::string_view text);

/// A word over the alphabet [q] = {1, ..., q}.
///
/// Positions used by the free functions below are 1-based, matching the
/// usual mathematical indexing of x = x_1 x_2 ... x_n; cyclic operations
/// reduce indices modulo n.
class Word {
 public:
  Word() = default;

  /// Throws std::invalid_argument if q < 1 or any symbol lies outside [q].
  Word(int q, State symbols);
  Word(int q, std::initializer_list<int> symbols);

  /// Parses "123" or "1,2,10". Throws on malformed text or symbols outside [q].
  static Word parse(int q, std::string_view text);

  int q() const { return q_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  /// 1-based access.
  int at(std::size_t i) const;
  /// 0-based access without range check.
  int operator[](std::size_t i) const { return static_cast<unsigned char>(symbols_[i]); }

  const State& symbols() const { return symbols_; }

  /// Digit form for q <= 9, comma-separated integers otherwise.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

 private:
  int q_ = 1;
  State symbols_;
};

/// x with the symbol at 1-based position i removed. Throws std::out_of_range
/// unless 1 <= i <= n.
Word delete_at(const Word& x, std::size_t i);

/// Cyclic left shift: (x_{r+1}, ..., x_{r+n}) with indices mod n. Any integer
/// r is accepted. Throws std::invalid_argument on the empty word.
Word rotate(const Word& x, long long r);

/// No two consecutive symbols equal (non-cyclic).
bool is_proper(const Word& x);

/// Proper and x_n != x_1. Words of length 0 and 1 count as cyclically
/// proper: a single vertex on a cycle has no neighbor to clash with, and
/// this is the only choice giving Z(2, q) = 2q(q-1).
bool is_cyclically_proper(const Word& x);

Word reflect(const Word& x);

/// Applies sigma symbol-wise; sigma[c - 1] is the image of color c.
/// Throws std::invalid_argument unless sigma is a bijection of [q].
Word apply_color_perm(const Word& x, std::span<const int> sigma);

/// Concatenation xy. Throws if the alphabets differ.
Word concat(const Word& x, const Word& y);

/// Cyclic-properness test on raw symbols with the same conventions as
/// is_cyclically_proper.
bool is_cyclically_proper(const State& s);
bool is_proper(const State& s);

}  // namespace findep
