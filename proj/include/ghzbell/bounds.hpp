// Copyright 2026 The ghzbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghzbell/polynomial.hpp"

namespace ghzbell {

/// Largest n for which the GME(m) ladder of MK_n is exposed.
inline constexpr int kMaxGmeLadderParties = 5;

/// Values closer than this to a bound count as meeting it, not crossing it.
inline constexpr double kCrossingTolerance = 1e-12;

enum class Crossing { Below, Met, Exceeded };

/// Exceeded iff value > bound + tol; Met iff |value − bound| <= tol.
Crossing classify(double value, double bound, double tol = kCrossingTolerance);
std::string_view crossing_name(Crossing c);

struct Threshold {
  std::string label;
  double value = 0.0;
};

/**
 * Local, entanglement and separability thresholds for one (n, family).
 *
 * Labels:
 *   GME(m)          exceeding it demonstrates genuine m-party entanglement.
 *                   MK_n ≤ 2^{(m-2)/2} whenever the largest entangled
 *                   subset has at most m−1 parties.
 *   Sep(l)          exceeding it demonstrates Sep(l); the value is the
 *                   Sep(l+1) membership bound, clamped below at 1.
 *   AlgebraicMax    Σ|c| of the polynomial.
 *   GhzQuantumValue maximum reachable by the GHZ state.
 *
 * MK (and Mermin for odd n, where it is MK) carries GME(2..n) for
 * n ≤ kMaxGmeLadderParties and only GME(n) = 2^{n/2−1} (the biseparable
 * bound) above that. Svetlichny carries Sep(1..n−1). Mermin for even n
 * carries no hierarchy.
 */
struct BoundsTable {
  int n = 0;
  Family family = Family::MK;
  double lhv_bound = 1.0;
  std::vector<Threshold> thresholds;

  std::optional<double> find(std::string_view label) const;
  /// Throws std::out_of_range for an unknown label.
  double at(std::string_view label) const;
};

/// Throws std::invalid_argument for n outside [2, kMaxPolynomialParties].
BoundsTable bounds_table(int n, Family family);

/// Bound on MK_n when no more than m parties are entangled: 2^{(m−1)/2}.
double mk_entanglement_bound(int m);

/// Bound on S_n for states in Sep(m): 2^{(n−m)/2} (n even) or
/// 2^{(n−m−1)/2} (n odd), without clamping.
double svetlichny_membership_bound(int n, int m);

/// Maximum Bell value of |G_n⟩ over all local settings.
double ghz_quantum_value(int n, Family family);

/// Labels whose crossing is a demonstration (everything but AlgebraicMax
/// and GhzQuantumValue).
bool is_demonstration_label(std::string_view label);

}  // namespace ghzbell
