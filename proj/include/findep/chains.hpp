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

#include <string>

#include "findep/exact.hpp"
#include "findep/kernel.hpp"

namespace findep {

/// Which color-indicator process is being tracked.
enum class ChainVariant {
  /// Indicator of colors {1, 2} in the 4-coloring; target: descent set.
  ColorsOneTwo_q4,
  /// Indicator of color 1 in the 3-coloring; target: peak set.
  ColorOne_q3,
};

std::string to_string(ChainVariant v);
/// Colors of the matching coloring (4 or 3).
int colors_of(ChainVariant v);

// Target laws on the n-cycle, all indices mod n. States are 0/1 symbols.
// Uniform random permutations replace i.i.d. uniforms: ties are null events.

/// Law of (1[U_i > U_{i+1}])_i. Requires 3 <= n <= 9.
ExactDist descent_law(int n);
/// Law of (1[U_{i-1} < U_i > U_{i+1}])_i. Requires 3 <= n <= 9.
ExactDist peak_law(int n);
/// Law of (1[B_i > B_{i+1}])_i for fair i.i.d. bits. Requires 3 <= n <= 20.
ExactDist bit_descent_law(int n);

// Same statistics on a window of length m of the line (no wrap-around):
// descents use U_1..U_{m+1}, peaks U_0..U_{m+1}, bit descents B_1..B_{m+1}.
ExactDist linear_descent_law(int m);
ExactDist linear_peak_law(int m);
ExactDist linear_bit_descent_law(int m);

/// Uniform law on the weight-1 and weight-2 vectors of length 3 for (i),
/// uniform on the three singletons for (ii).
ExactDist initial_law(ChainVariant v);

/// States of length n reachable from the support of initial_law(v) by
/// repeated J-rule steps, ascending.
std::vector<State> reachable_states(ChainVariant v, int n);

/// Insertion chain for the color-indicator vector J, rows over
/// reachable_states(v, n). Requires n >= 3.
///  (i):  (I, B) uniform on [n] x {0,1}; Z = 1 - J_I if J_{I-1} = J_I else B;
///        insert Z before position I.
///  (ii): I uniform; Z = 1 iff J_{I-1} = J_I = 0; insert Z before position I.
/// Both finish with a uniform rotation of the (n+1)-cycle.
Kernel j_kernel(ChainVariant v, int n);

/// Insertion chain for the target vector Q, rows over reachable_states(v, n).
///  (i):  replace a uniform symbol by the pair (B, 1-B), B a fair bit.
///  (ii): replace a uniform cyclically adjacent pair (Q_{I-1}, Q_I) by 0 1 0;
///        throws std::invalid_argument on a state with adjacent ones.
/// Both finish with a uniform rotation of the (n+1)-cycle.
Kernel q_kernel(ChainVariant v, int n);

/// Transition rows of a single state, for the two rules above.
ExactDist j_step(ChainVariant v, const State& x);
ExactDist q_step(ChainVariant v, const State& x);

/// Two-site statistic of the ι-process (1 -> 1, 2 -> 2, 3 and 4 -> ⋆) of
/// the 1-dependent 4-coloring of the line.
struct IotaStatistic {
  Rational both_star;                 // P(X_1, X_2 both in {3, 4})
  Rational two_block_factor = {1, 4}; // value any 2-block-factor would force
  Rational single_star;               // P(X_1 in {3, 4})
};
IotaStatistic iota_two_site_statistic();

}  // namespace findep
