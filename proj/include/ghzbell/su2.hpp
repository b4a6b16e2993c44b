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

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <span>
#include <stdexcept>
#include <vector>

namespace ghzbell {

using Complex = std::complex<double>;

/// Tolerance used for unit-norm and Hermiticity checks.
inline constexpr double kUnitTolerance = 1e-12;

/// Largest party count accepted by the statevector oracle (4096 amplitudes).
inline constexpr int kMaxStatevectorParties = 10;

/// A direction on the Bloch sphere; the observable it defines is σ·n.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  bool is_unit(double tol = kUnitTolerance) const {
    return std::abs(x * x + y * y + z * z - 1.0) <= tol;
  }
  BlochVector operator-() const { return {-x, -y, -z}; }

  /// Scales (x, y, z) onto the unit sphere. Throws on the zero vector.
  static BlochVector normalized(double x, double y, double z);

  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

double dot(const BlochVector& a, const BlochVector& b);

/// An SU(2) frame rotation R = q0·I − i(q1 σ1 + q2 σ2 + q3 σ3).
///
/// q and −q act identically by conjugation; nothing here canonicalizes the
/// sign. The quaternion product matches the 2×2 matrix product, since the
/// units −iσ_k obey the Hamilton relations.
struct LocalRotation {
  double q0 = 1.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  static LocalRotation identity() { return {}; }
  /// cos(θ/2)·I − i sin(θ/2)·(axis·σ). The axis is normalized first.
  static LocalRotation from_axis_angle(const BlochVector& axis, double theta);
  static LocalRotation about_z(double theta);

  bool is_unit(double tol = kUnitTolerance) const;
  LocalRotation adjoint() const { return {q0, -q1, -q2, -q3}; }

  friend bool operator==(const LocalRotation&, const LocalRotation&) = default;
};

/// Row-major 2×2 complex matrix.
using Matrix2 = std::array<Complex, 4>;

Matrix2 to_matrix(const LocalRotation& r);
Matrix2 multiply(const Matrix2& a, const Matrix2& b);
Matrix2 adjoint(const Matrix2& m);

/// The matrix product `first · second`.
LocalRotation compose(const LocalRotation& first, const LocalRotation& second);

/// Entries of a 2×2 Hermitian observable.
struct ObservableMatrix {
  Complex m00;
  Complex m01;
  Complex m10;
  Complex m11;

  bool is_hermitian(double tol = kUnitTolerance) const;
  /// Trace zero with eigenvalues ±1.
  bool is_pauli_like(double tol = kUnitTolerance) const;
  ObservableMatrix operator-() const { return {-m00, -m01, -m10, -m11}; }
};

/// σ·n. Throws std::invalid_argument when `direction` is not unit-norm.
ObservableMatrix observable_matrix(const BlochVector& direction);

/// Pauli components of a Hermitian matrix: (Re m01, −Im m01, m00).
BlochVector pauli_components(const ObservableMatrix& m);

/// The direction d' with σ·d' = R†(σ·d)R.
///
/// Measuring σ·d on R|ψ⟩ equals measuring σ·d' on |ψ⟩. Composition order:
/// rotate_observable(R2, rotate_observable(R1, d)) ==
/// rotate_observable(compose(R1, R2), d).
BlochVector rotate_observable(const LocalRotation& rotation,
                              const BlochVector& direction);

/// ⟨G_n| O_1 ⊗ … ⊗ O_n |G_n⟩ for the GHZ state (|0…0⟩ + |1…1⟩)/√2.
///
/// Closed form ½[∏m00 + ∏m01 + ∏m10 + ∏m11]. The bracket is real for
/// Hermitian inputs; an imaginary residue above 1e-12 raises
/// std::domain_error. Throws std::invalid_argument on an empty list.
double ghz_correlator(std::span<const ObservableMatrix> observables);

/// Dense n-qubit state. Party 0 is the most significant bit of the index.
struct Statevector {
  int parties = 0;
  std::vector<Complex> amplitudes;

  double norm_squared() const;
};

Statevector ghz_state(int parties);

/// (R_1 ⊗ … ⊗ R_n)|G_n⟩.
Statevector rotated_ghz_state(std::span<const LocalRotation> rotations);

/// ⟨ψ| O_1 ⊗ … ⊗ O_n |ψ⟩ with ψ = (R_1 ⊗ … ⊗ R_n)|G_n⟩, by direct tensor
/// application. Slow oracle for ghz_correlator ∘ rotate_observable.
/// Throws std::invalid_argument on size mismatch, n < 1 or
/// n > kMaxStatevectorParties.
double statevector_expectation(std::span<const LocalRotation> rotations,
                               std::span<const ObservableMatrix> observables);

/// Anything that yields standard normal draws.
template <class S>
concept GaussianSource = requires(S& s) {
  { s.next_gaussian() } -> std::convertible_to<double>;
};

/// Haar-random SU(2) element: four standard Gaussians normalized to a unit
/// quaternion. Consumes exactly four Gaussian draws.
template <GaussianSource S>
LocalRotation haar_random_rotation(S& stream) {
  const double a = stream.next_gaussian();
  const double b = stream.next_gaussian();
  const double c = stream.next_gaussian();
  const double d = stream.next_gaussian();
  const double norm = std::sqrt(a * a + b * b + c * c + d * d);
  if (!(norm > 0.0)) {
    throw std::domain_error("haar_random_rotation: degenerate Gaussian draw");
  }
  return {a / norm, b / norm, c / norm, d / norm};
}

/// Uniform point on the sphere from three Gaussian draws.
template <GaussianSource S>
BlochVector uniform_direction(S& stream) {
  const double x = stream.next_gaussian();
  const double y = stream.next_gaussian();
  const double z = stream.next_gaussian();
  return BlochVector::normalized(x, y, z);
}

}  // namespace ghzbell
