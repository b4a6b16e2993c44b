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

// Closed-form Bell values when every frame rotation is about the shared z
// axis, R^z_i = cos(θ_i/2) I − i sin(θ_i/2) σ3. Only Θ = Σθ_i matters.
//
// Strategy A: A_i = σ1, A'_i = σ2 for every party.
// Strategy B: for odd-n Mermin/MK the full swap A_i = σ2, A'_i = σ1;
//             otherwise A_1 = σ2, A'_1 = −σ1 and A_{i>1} = σ1, A'_{i>1} = σ2.
//
// The Mermin closed forms describe the odd-primed-count expansion
// (mermin_generator_polynomial). For n ≡ 1 (mod 4) MK_n is that expansion
// prime-swapped and negated, which exchanges the A and B values; the
// two-strategy maximum is the same for both.
//
// For even n, MK_n ≥ 2^{n/2−1} is an imported result. The two strategies
// here only certify 2^{n/2−1}·max(|sin Θ|, |cos Θ|) ≥ 2^{n/2−1}/√2.
//
// Threshold equality (e.g. Θ = π/4 for odd Mermin) is reported as Met,
// never as a crossing.

#pragma once

#include <string>
#include <vector>

#include "ghzbell/bounds.hpp"
#include "ghzbell/polynomial.hpp"
#include "ghzbell/su2.hpp"

namespace ghzbell {

enum class RestrictedStrategy { A, B };

class RestrictedScenario {
 public:
  explicit RestrictedScenario(std::vector<double> theta);
  /// Θ split evenly over n parties.
  static RestrictedScenario even_split(int n, double total);

  int parties() const { return static_cast<int>(theta_.size()); }
  const std::vector<double>& theta() const { return theta_; }
  double total() const { return total_; }
  std::vector<LocalRotation> rotations() const;

 private:
  std::vector<double> theta_;
  double total_;
};

/// cos(Θ − p·π/2): strategy-A correlator with p primed parties.
double restricted_expectation(double total, int primed_count);
double restricted_expectation(const RestrictedScenario& scenario, PrimeMask mask);

/// prefactor·|sin Θ| (A) or prefactor·|cos Θ| (B); prefactor 2^{(n−1)/2}
/// for odd n, 2^{n/2−1} for even n.
double restricted_mermin_value(int n, double total, RestrictedStrategy strategy);

/// One branch of the odd-n Svetlichny value: 2^{(n−3)/2}|sin x ± cos x| with
/// + for n ≡ 1 (mod 4), − for n ≡ 3 (mod 4); x = Θ (A) or Θ + π/2 (B).
/// Throws std::invalid_argument for even n or n < 3.
double restricted_svetlichny_strategy_value(int n, double total,
                                            RestrictedStrategy strategy);

/// Maximum over both strategies, never below 2^{(n−3)/2}.
double restricted_svetlichny_value(int n, double total);

/// 2^{n/2−1}·max(|sin Θ|, |cos Θ|): the two-strategy even-n Mermin value.
/// Throws std::invalid_argument for odd n.
double restricted_mk_even_value(int n, double total);

/// |sin Θ| > 2^{−(n−1)/2}, strictly.
bool violation_condition(int n, double total);

struct StrategySettings {
  std::vector<BlochVector> unprimed;
  std::vector<BlochVector> primed;
};

StrategySettings strategy_settings(int n, Family family, RestrictedStrategy strategy);

/// |𝓑| of the explicit settings on the z-rotated GHZ state, computed with
/// rotate_observable and ghz_correlator.
double strategy_bell_value(const BellPolynomial& p, const RestrictedScenario& scenario,
                           const StrategySettings& settings);

/// Demonstration threshold the two-strategy value is compared against:
/// 2^{n/2−1} for odd Mermin/MK and every even MK/Svetlichny, 2^{(n−3)/2}
/// for odd Svetlichny, the local bound 1 for even Mermin.
double restricted_threshold(int n, Family family);

struct SweepRow {
  double theta = 0.0;
  double strategy_a = 0.0;
  double strategy_b = 0.0;
  double analytic_max = 0.0;
  double optimizer_max = 0.0;
  double threshold = 0.0;
  Crossing analytic_status = Crossing::Below;
  Crossing optimizer_status = Crossing::Below;
};

/// Rows at Θ = 2πk/grid, k = 0..grid−1. The optimizer column maximizes the
/// family polynomial over {σ1, σ2} with primed-sign flips and Θ split
/// evenly over the parties.
std::vector<SweepRow> restricted_sweep(int n, Family family, int grid);

}  // namespace ghzbell
