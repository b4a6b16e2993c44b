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

// Exhaustive search over each party's ordered pair of measurement settings.
//
// Per party, an option is (i, j, s'): A = σ·d_i, A' = s'·σ·d_j with i ≠ j.
// The unprimed sign is fixed to + because flipping both settings of one
// party negates every full-correlation term and leaves |𝓑| unchanged.
// Options are ordered by (i, j) lexicographically, then s' = +1 before −1.
// Assignments are ordered lexicographically with party 0 most significant;
// the first maximum in that order is reported.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghzbell/polynomial.hpp"
#include "ghzbell/random_stream.hpp"
#include "ghzbell/su2.hpp"

namespace ghzbell {

enum class CandidateKind { Pauli, Tetrahedron, Random, Custom };

/// Which candidate set to build: Pauli, Tetrahedron or Random(count).
struct CandidateSpec {
  CandidateKind kind = CandidateKind::Pauli;
  int count = 3;

  /// "pauli", "tetrahedron", "random:K".
  std::string to_string() const;
  /// Inverse of to_string(). Throws std::invalid_argument.
  static CandidateSpec parse(const std::string& text);
  /// Number of base directions this spec produces.
  int size() const;

  friend bool operator==(const CandidateSpec&, const CandidateSpec&) = default;
};

struct CandidateSet {
  CandidateKind kind = CandidateKind::Custom;
  std::vector<BlochVector> directions;

  std::size_t size() const { return directions.size(); }
};

/// The coordinate axes σ1, σ2, σ3.
CandidateSet pauli_candidates();
/// (1,1,1)/√3, (1,−1,−1)/√3, (−1,1,−1)/√3, (−1,−1,1)/√3.
CandidateSet tetrahedron_candidates();
/// k uniform sphere points; consumes 3k Gaussian draws. Throws for k < 2.
CandidateSet random_candidates(int k, RandomStream& stream);
/// Directions are validated as unit-norm. Throws for fewer than two.
CandidateSet custom_candidates(std::vector<BlochVector> directions);
/// Pauli/Tetrahedron ignore the stream.
CandidateSet make_candidate_set(const CandidateSpec& spec, RandomStream& stream);

struct EnumerationOptions {
  /// Let A' take either sign.
  bool primed_sign_flips = true;
  /// Also enumerate the sign of A; redundant, kept for soundness checks.
  bool unprimed_sign_flips = false;
};

struct PartySetting {
  int base = 0;          ///< index of A's direction
  int primed_base = 1;   ///< index of A''s direction
  int sign = 1;          ///< sign of A
  int primed_sign = 1;   ///< sign of A'

  friend bool operator==(const PartySetting&, const PartySetting&) = default;
};

using MeasurementAssignment = std::vector<PartySetting>;

/// All options for one party with m base directions, in enumeration order.
std::vector<PartySetting> party_options(std::size_t m, const EnumerationOptions& options);

/// Streams every assignment in enumeration order.
class AssignmentEnumerator {
 public:
  /// `sets` holds one candidate set shared by all parties or one per party.
  AssignmentEnumerator(std::span<const CandidateSet> sets, int parties,
                       const EnumerationOptions& options = {});

  std::uint64_t count() const { return count_; }
  /// Writes the next assignment; false once exhausted.
  bool next(MeasurementAssignment& out);
  /// Assignment at position `index` of the enumeration.
  MeasurementAssignment at(std::uint64_t index) const;

 private:
  std::vector<std::vector<PartySetting>> options_;
  std::vector<std::size_t> digits_;
  std::uint64_t count_ = 1;
  std::uint64_t emitted_ = 0;
};

/// (2·m·(m−1))^n with sign flips, (m·(m−1))^n without.
std::uint64_t assignment_count(std::span<const CandidateSet> sets, int parties,
                               const EnumerationOptions& options = {});

struct OptimizationOutcome {
  double bell_value = 0.0;
  MeasurementAssignment assignment;
  std::uint64_t evaluations = 0;
};

/// Maximum |𝓑| over every assignment for the state (R_1 ⊗ … ⊗ R_n)|G_n⟩.
///
/// Throws std::invalid_argument when the rotation count differs from the
/// polynomial's party count or `sets` is neither size 1 nor size n.
OptimizationOutcome max_bell_value(const BellPolynomial& p,
                                   std::span<const LocalRotation> rotations,
                                   std::span<const CandidateSet> sets,
                                   const EnumerationOptions& options = {});

OptimizationOutcome max_bell_value(const BellPolynomial& p,
                                   std::span<const LocalRotation> rotations,
                                   const CandidateSet& set,
                                   const EnumerationOptions& options = {});

/// |𝓑| of one assignment, computed term by term through rotate_observable
/// and ghz_correlator.
double assignment_bell_value(const BellPolynomial& p,
                             std::span<const LocalRotation> rotations,
                             std::span<const CandidateSet> sets,
                             const MeasurementAssignment& assignment);

}  // namespace ghzbell
