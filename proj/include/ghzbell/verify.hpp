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

#include <cstdint>
#include <string>
#include <vector>

#include "ghzbell/su2.hpp"

namespace ghzbell {

/// Rotation about (1,1,0)/√2 by arctan √2: gives σ1, σ2, σ3 equal
/// components in the σ1–σ2 plane. M_3 with Pauli settings stays below 1.
LocalRotation plane_balancing_rotation();

/// cos(3π/20) I − i sin(3π/20) σ1, applied to the last party only.
LocalRotation tetrahedral_counterexample_rotation();

/// Reference M_3 values for the two rotated states above.
inline constexpr double kPlaneBalancingMermin3 = 0.98;        // literature value, 2 d.p.
inline constexpr double kTetrahedralCounterexampleMermin3 = 0.93;  // literature value, 2 d.p.
/// Independent statevector brute force of the tetrahedral counterexample.
inline constexpr double kTetrahedralCounterexampleComputed = 0.9225296148718236;

struct VerifyOptions {
  bool quick = false;              ///< 10^2 oracle cases instead of 10^4
  std::uint64_t seed = 20140301;
  bool inject_mermin_sign_fault = false;  ///< negates one Mermin term
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-module consistency checks run by `ghzbell verify`.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace ghzbell
