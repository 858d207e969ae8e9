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

#include "findep/eden.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "findep/kernel.hpp"
#include "json.hpp"

namespace findep {

int EdenState::new_tree_vertex() {
  tree_.emplace_back();
  return static_cast<int>(tree_.size()) - 1;
}

EdenState EdenState::initial(int q, int a, int b, int c) {
  if (q < 3) throw std::invalid_argument("Eden coloring requires q >= 3");
  for (int v : {a, b, c})
    if (v < 1 || v > q) throw std::invalid_argument("initial color outside [q]");
  if (a == b || b == c || a == c) throw std::invalid_argument("root triangle colors must differ");
  EdenState s;
  s.q_ = q;
  const int root = s.new_tree_vertex();
  s.tree_[0].in_cluster = true;
  for (int j = 0; j < 3; ++j) {
    const int child = s.new_tree_vertex();
    s.tree_[static_cast<std::size_t>(child)].neighbors[0] = root;
    s.tree_[0].neighbors[static_cast<std::size_t>(j)] = child;
    s.gaps_.push_back({child});
  }
  s.dual_colors_ = {a, b, c};
  s.outer_ = {{0, a}, {1, b}, {2, c}};
  s.triangles_.push_back({0, 1, 2});
  s.cluster_size_ = 1;
  return s;
}

EdenState EdenState::grown(std::size_t gap, std::size_t color_choice) const {
  const std::size_t m = outer_.size();
  if (gap >= m) throw std::out_of_range("EdenState::grown: gap index out of range");
  if (color_choice >= static_cast<std::size_t>(q_ - 2))
    throw std::out_of_range("EdenState::grown: color choice out of range");
  EdenState s = *this;
  const DualVertex left = outer_[gap];
  const DualVertex right = outer_[(gap + 1) % m];

  const int b = gaps_[gap].boundary;
  const int c1 = s.new_tree_vertex();
  const int c2 = s.new_tree_vertex();
  auto& bv = s.tree_[static_cast<std::size_t>(b)];
  bv.in_cluster = true;
  bv.neighbors[1] = c1;
  bv.neighbors[2] = c2;
  s.tree_[static_cast<std::size_t>(c1)].neighbors[0] = b;
  s.tree_[static_cast<std::size_t>(c2)].neighbors[0] = b;

  int color = 0;
  for (int c = 1, seen = 0; c <= q_; ++c) {
    if (c == left.color || c == right.color) continue;
    if (static_cast<std::size_t>(seen++) == color_choice) {
      color = c;
      break;
    }
  }
  const int id = static_cast<int>(s.dual_colors_.size());
  s.dual_colors_.push_back(color);
  s.outer_.insert(s.outer_.begin() + static_cast<std::ptrdiff_t>(gap + 1), {id, color});
  s.gaps_[gap] = {c1};
  s.gaps_.insert(s.gaps_.begin() + static_cast<std::ptrdiff_t>(gap + 1), {c2});
  s.triangles_.push_back({left.id, right.id, id});
  ++s.cluster_size_;
  return s;
}

Word EdenState::read_from(std::size_t start) const {
  const std::size_t m = outer_.size();
  if (start >= m) throw std::out_of_range("EdenState::read_from: start out of range");
  State colors(m, '\0');
  for (std::size_t i = 0; i < m; ++i) colors[i] = static_cast<char>(outer_[(start + i) % m].color);
  return Word(q_, std::move(colors));
}

void EdenState::validate() const {
  auto fail = [](const std::string& what) { throw std::logic_error("EdenState: " + what); };
  const std::size_t m = outer_.size();
  if (m != cluster_size_ + 2) fail("outer face must have n + 2 vertices");
  if (gaps_.size() != m) fail("gap count must equal outer face length");
  if (triangles_.size() != cluster_size_) fail("one dual triangle per cluster vertex");

  std::size_t in_cluster = 0;
  std::multiset<int> boundary;
  for (std::size_t v = 0; v < tree_.size(); ++v) {
    if (!tree_[v].in_cluster) continue;
    ++in_cluster;
    for (int w : tree_[v].neighbors) {
      if (w < 0) fail("cluster vertex with unmaterialized neighbor");
      if (!tree_[static_cast<std::size_t>(w)].in_cluster) boundary.insert(w);
    }
  }
  if (in_cluster != cluster_size_) fail("cluster size mismatch");
  if (boundary.size() != cluster_size_ + 2) fail("cluster must have n + 2 boundary vertices");
  std::multiset<int> from_gaps;
  for (const Gap& g : gaps_) from_gaps.insert(g.boundary);
  if (from_gaps != boundary) fail("gaps must list each boundary vertex exactly once");

  std::set<int> ids;
  for (std::size_t j = 0; j < m; ++j) {
    ids.insert(outer_[j].id);
    if (outer_[j].color != dual_colors_[static_cast<std::size_t>(outer_[j].id)])
      fail("outer color disagrees with dual color table");
    if (outer_[j].color == outer_[(j + 1) % m].color) fail("adjacent outer vertices share a color");
  }
  if (ids.size() != m) fail("outer face repeats a dual vertex");
  for (const auto& t : triangles_) {
    const int a = dual_colors_[static_cast<std::size_t>(t[0])];
    const int b = dual_colors_[static_cast<std::size_t>(t[1])];
    const int c = dual_colors_[static_cast<std::size_t>(t[2])];
    if (a == b || b == c || a == c) fail("improperly colored triangle");
  }
}

std::string EdenState::snapshot_json() const {
  nlohmann::json j;
  j["q"] = q_;
  j["cluster_size"] = cluster_size_;
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json cluster = nlohmann::json::array();
  for (std::size_t v = 0; v < tree_.size(); ++v) {
    if (tree_[v].in_cluster) cluster.push_back(v);
    const int parent = tree_[v].neighbors[0];
    // Each non-root vertex contributes its parent edge: every tree edge once.
    if (v != 0 && parent >= 0) edges.push_back({parent, v});
  }
  j["tree_edges"] = edges;
  j["cluster"] = cluster;
  nlohmann::json outer = nlohmann::json::array();
  for (const auto& d : outer_) outer.push_back({{"id", d.id}, {"color", d.color}});
  j["outer"] = outer;
  nlohmann::json gaps = nlohmann::json::array();
  for (std::size_t g = 0; g < gaps_.size(); ++g)
    gaps.push_back({{"left", outer_[g].id},
                    {"right", outer_[(g + 1) % outer_.size()].id},
                    {"boundary", gaps_[g].boundary}});
  j["gaps"] = gaps;
  j["triangles"] = triangles_;
  return j.dump();
}

EdenState eden_init(int q, RngStream& rng) {
  if (q < 3) throw std::invalid_argument("Eden coloring requires q >= 3");
  const auto uq = static_cast<std::uint64_t>(q);
  const int a = static_cast<int>(rng.below(uq)) + 1;
  int b = static_cast<int>(rng.below(uq - 1)) + 1;
  if (b >= a) ++b;
  int c = static_cast<int>(rng.below(uq - 2)) + 1;
  for (int used : {std::min(a, b), std::max(a, b)})
    if (c >= used) ++c;
  return EdenState::initial(q, a, b, c);
}

EdenState eden_step(const EdenState& s, RngStream& rng) {
  const auto gap = static_cast<std::size_t>(rng.below(s.gaps().size()));
  const auto choice = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(s.q() - 2)));
  return s.grown(gap, choice);
}

Word eden_read(const EdenState& s, RngStream& rng) {
  return s.read_from(static_cast<std::size_t>(rng.below(s.outer().size())));
}

Word eden_sample(int length, int q, RngStream& rng) {
  if (length < 3) throw std::invalid_argument("eden_sample requires a cycle of length >= 3");
  EdenState s = eden_init(q, rng);
  for (int len = 3; len < length; ++len) s = eden_step(s, rng);
  return eden_read(s, rng);
}

bool eden_vs_necklace_kernel_check(int n, int q) {
  if (n < 3) throw std::invalid_argument("eden_vs_necklace_kernel_check requires n >= 3");
  if (q < 3) throw std::invalid_argument("eden_vs_necklace_kernel_check requires q >= 3");
  // One representative state per outer coloring (read from outer()[0]); the
  // one-step law depends on nothing else.
  std::map<State, EdenState> level;
  for (int a = 1; a <= q; ++a)
    for (int b = 1; b <= q; ++b)
      for (int c = 1; c <= q; ++c)
        if (a != b && b != c && a != c) {
          EdenState s = EdenState::initial(q, a, b, c);
          level.emplace(s.read_from(0).symbols(), std::move(s));
        }
  for (int len = 3; len < n; ++len) {
    std::map<State, EdenState> next;
    for (const auto& [key, s] : level)
      for (std::size_t g = 0; g < s.gaps().size(); ++g)
        for (std::size_t c = 0; c < static_cast<std::size_t>(q - 2); ++c) {
          EdenState t = s.grown(g, c);
          next.emplace(t.read_from(0).symbols(), std::move(t));
        }
    level = std::move(next);
  }
  const Kernel kernel = coupling_kernel(n, q);
  for (const auto& [key, s] : level) {
    s.validate();
    WeightMap counts;
    for (std::size_t g = 0; g < s.gaps().size(); ++g)
      for (std::size_t c = 0; c < static_cast<std::size_t>(q - 2); ++c) {
        const EdenState t = s.grown(g, c);
        t.validate();
        for (std::size_t u = 0; u < t.outer().size(); ++u) counts[t.read_from(u).symbols()] += 1;
      }
    if (!kernel.has_row(key)) return false;
    if (ExactDist::from_weights(std::move(counts)) != kernel.row(key)) return false;
  }
  return true;
}

std::uint64_t count_proper_colorings(const EdenState& s) {
  const std::size_t vertices = s.dual_colors().size();
  std::vector<std::vector<int>> earlier(vertices);
  for (const auto& t : s.triangles())
    for (int a : t)
      for (int b : t)
        if (a < b) earlier[static_cast<std::size_t>(b)].push_back(a);
  std::vector<int> color(vertices, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == vertices) {
      ++count;
      return;
    }
    for (int c = 1; c <= s.q(); ++c) {
      bool ok = true;
      for (int u : earlier[v]) ok = ok && color[static_cast<std::size_t>(u)] != c;
      if (!ok) continue;
      color[v] = c;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace findep
