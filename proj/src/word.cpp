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

#include "findep/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace findep {

namespace {

int symbol_value(char c) { return static_cast<unsigned char>(c); }

void check_alphabet(int q, const State& s) {
  if (q < 1 || q > 255) throw std::invalid_argument("alphabet size q must be in [1, 255]");
  for (char c : s) {
    const int v = symbol_value(c);
    if (v < 1 || v > q)
      throw std::invalid_argument("symbol " + std::to_string(v) + " outside [1, " +
                                  std::to_string(q) + "]");
  }
}

}  // namespace

std::string format_state(const State& s, bool digits) {
  std::string out;
  out.reserve(s.size() * (digits ? 1 : 3));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int v = symbol_value(s[i]);
    if (digits) {
      out.push_back(static_cast<char>('0' + v));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(v);
    }
  }
  return out;
}

std::string format_state(const State& s) {
  const bool digits = std::all_of(s.begin(), s.end(), [](char c) { return symbol_value(c) <= 9; });
  return format_state(s, digits);
}

State parse_state(std::string_view text) {
  State out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed word: " + std::string(text));
      out.push_back(static_cast<char>(c - '0'));
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    int v = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || v < 0 || v > 255)
      throw std::invalid_argument("malformed word: " + std::string(text));
    out.push_back(static_cast<char>(v));
    pos = end + 1;
  }
  return out;
}

Word::Word(int q, State symbols) : q_(q), symbols_(std::move(symbols)) {
  check_alphabet(q_, symbols_);
}

Word::Word(int q, std::initializer_list<int> symbols) : q_(q) {
  for (int v : symbols) {
    if (v < 0 || v > 255) throw std::invalid_argument("symbol out of byte range");
    symbols_.push_back(static_cast<char>(v));
  }
  check_alphabet(q_, symbols_);
}

Word Word::parse(int q, std::string_view text) { return Word(q, parse_state(text)); }

int Word::at(std::size_t i) const {
  if (i < 1 || i > symbols_.size()) throw std::out_of_range("word index out of range");
  return (*this)[i - 1];
}

std::string Word::str() const { return format_state(symbols_, q_ <= 9); }

Word delete_at(const Word& x, std::size_t i) {
  if (i < 1 || i > x.size()) throw std::out_of_range("delete_at: index out of range");
  State s = x.symbols();
  s.erase(i - 1, 1);
  return Word(x.q(), std::move(s));
}

Word rotate(const Word& x, long long r) {
  if (x.empty()) throw std::invalid_argument("rotate: empty word");
  const auto n = static_cast<long long>(x.size());
  const auto shift = static_cast<std::size_t>(((r % n) + n) % n);
  State s = x.symbols();
  std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(shift), s.end());
  return Word(x.q(), std::move(s));
}

bool is_proper(const State& s) {
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool is_cyclically_proper(const State& s) {
  if (s.size() <= 1) return true;
  return is_proper(s) && s.back() != s.front();
}

bool is_proper(const Word& x) { return is_proper(x.symbols()); }

bool is_cyclically_proper(const Word& x) { return is_cyclically_proper(x.symbols()); }

Word reflect(const Word& x) {
  State s(x.symbols().rbegin(), x.symbols().rend());
  return Word(x.q(), std::move(s));
}

Word apply_color_perm(const Word& x, std::span<const int> sigma) {
  const int q = x.q();
  if (static_cast<int>(sigma.size()) != q)
    throw std::invalid_argument("color permutation must have exactly q entries");
  std::vector<bool> seen(static_cast<std::size_t>(q) + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > q || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("color map is not a bijection of [q]");
    seen[static_cast<std::size_t>(v)] = true;
  }
  State s = x.symbols();
  for (char& c : s) c = static_cast<char>(sigma[static_cast<std::size_t>(symbol_value(c) - 1)]);
  return Word(q, std::move(s));
}

Word concat(const Word& x, const Word& y) {
  if (x.q() != y.q()) throw std::invalid_argument("concat: alphabets differ");
  return Word(x.q(), x.symbols() + y.symbols());
}

}  // namespace findep
