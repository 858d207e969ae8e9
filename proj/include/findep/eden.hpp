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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "findep/growth.hpp"
#include "findep/word.hpp"

namespace findep {

/// Eden growth cluster T_n on the planar 3-regular tree together with the
/// colored outer face of its dual stacked triangulation D_n.
///
/// Every tree vertex v carries a dual triangle Δ(v); the cluster's triangles
/// glue into D_n, a 2-tree on n + 2 vertices all lying on the outer face.
/// Each outer edge (outer[j], outer[j+1]) is crossed by exactly one tree
/// edge leaving the cluster; its far endpoint is the boundary vertex of gap
/// j. Growing at gap j adds that boundary vertex to the cluster, stacks its
/// triangle on the outer edge and splits gap j in two.
///
/// Colors: the root triangle gets one of the q(q-1)(q-2) proper colorings;
/// each stacked vertex sees exactly two colored, mutually adjacent vertices,
/// so it has exactly q-2 legal colors regardless of earlier choices. Hence
/// the number of proper q-colorings of D_n is q(q-1)(q-2)^n, and choosing
/// each new color uniformly among its q-2 options picks every one of them
/// with the same probability. Interior dual vertices keep their colors
/// forever, so only the outer cycle needs to stay ordered.
class EdenState {
 public:
  struct DualVertex {
    int id;
    int color;
  };
  struct Gap {
    int boundary;  // tree vertex adjacent to the cluster, not in it
  };
  struct TreeVertex {
    std::array<int, 3> neighbors{-1, -1, -1};  // clockwise; [0] is the parent for non-root
    bool in_cluster = false;
  };

  int q() const { return q_; }
  /// Cluster size n.
  std::size_t cluster_size() const { return cluster_size_; }
  /// Clockwise outer cycle of D_n; gap j lies between outer()[j] and outer()[j+1].
  const std::vector<DualVertex>& outer() const { return outer_; }
  const std::vector<Gap>& gaps() const { return gaps_; }
  const std::vector<TreeVertex>& tree() const { return tree_; }
  /// Dual triangles Δ(v) for v in the cluster, in growth order (dual ids).
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  /// Color of each dual vertex, indexed by id.
  const std::vector<int>& dual_colors() const { return dual_colors_; }

  /// Outer colors read clockwise from outer()[start].
  Word read_from(std::size_t start) const;

  /// Throws std::logic_error if any structural or coloring invariant fails.
  void validate() const;

  /// {"q", "cluster_size", "tree_edges", "cluster", "outer", "gaps", "triangles"}.
  std::string snapshot_json() const;

  /// Root cluster with its triangle colored (a, b, c) clockwise.
  static EdenState initial(int q, int a, int b, int c);

  /// Deterministic growth: gap index in [0, n+2), color_choice in [0, q-2)
  /// selecting among the legal colors in increasing order.
  EdenState grown(std::size_t gap, std::size_t color_choice) const;

 private:
  int new_tree_vertex();

  int q_ = 3;
  std::size_t cluster_size_ = 0;
  std::vector<DualVertex> outer_;
  std::vector<Gap> gaps_;
  std::vector<TreeVertex> tree_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<int> dual_colors_;
};

/// T_1 with a uniformly colored root triangle. Throws for q < 3.
EdenState eden_init(int q, RngStream& rng);
/// Adds a uniform boundary vertex and colors its new dual vertex uniformly
/// among the q-2 legal colors.
EdenState eden_step(const EdenState& s, RngStream& rng);
/// Outer colors clockwise from a uniform outer vertex.
Word eden_read(const EdenState& s, RngStream& rng);

/// Full Eden sampler for a coloring of the cycle of length `length` >= 3.
Word eden_sample(int length, int q, RngStream& rng);

/// For every outer coloring of length n reachable by growth, compares the
/// exact law of eden_read(eden_step(s)) (all gap, color and start choices
/// exhausted) with the coupling_kernel(n, q) row of that coloring.
bool eden_vs_necklace_kernel_check(int n, int q);

/// Brute-force count of proper q-colorings of the triangulation D_n held by s.
std::uint64_t count_proper_colorings(const EdenState& s);

}  // namespace findep
