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

#include "ghzbell/su2.hpp"

#include <string>

namespace ghzbell {

BlochVector BlochVector::normalized(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0)) {
    throw std::invalid_argument("BlochVector::normalized: zero vector");
  }
  return {x / n, y / n, z / n};
}

double dot(const BlochVector& a, const BlochVector& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

LocalRotation LocalRotation::from_axis_angle(const BlochVector& axis,
                                             double theta) {
  const BlochVector n = BlochVector::normalized(axis.x, axis.y, axis.z);
  const double s = std::sin(theta / 2.0);
  return {std::cos(theta / 2.0), s * n.x, s * n.y, s * n.z};
}

LocalRotation LocalRotation::about_z(double theta) {
  return {std::cos(theta / 2.0), 0.0, 0.0, std::sin(theta / 2.0)};
}

bool LocalRotation::is_unit(double tol) const {
  return std::abs(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3 - 1.0) <= tol;
}

Matrix2 to_matrix(const LocalRotation& r) {
  // q0·I − i(q1 σ1 + q2 σ2 + q3 σ3)
  return {Complex(r.q0, -r.q3), Complex(-r.q2, -r.q1),
          Complex(r.q2, -r.q1), Complex(r.q0, r.q3)};
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix2 adjoint(const Matrix2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

LocalRotation compose(const LocalRotation& a, const LocalRotation& b) {
  // Hamilton product a·b.
  return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
          a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
          a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
          a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
}

bool ObservableMatrix::is_hermitian(double tol) const {
  return std::abs(m00.imag()) <= tol && std::abs(m11.imag()) <= tol &&
         std::abs(m10 - std::conj(m01)) <= tol;
}

bool ObservableMatrix::is_pauli_like(double tol) const {
  if (!is_hermitian(tol)) return false;
  if (std::abs(m00.real() + m11.real()) > tol) return false;
  return std::abs(m00.real() * m00.real() + std::norm(m01) - 1.0) <= tol;
}

ObservableMatrix observable_matrix(const BlochVector& d) {
  if (!d.is_unit()) {
    throw std::invalid_argument("observable_matrix: direction is not unit-norm");
  }
  return {Complex(d.z, 0.0), Complex(d.x, -d.y), Complex(d.x, d.y),
          Complex(-d.z, 0.0)};
}

BlochVector pauli_components(const ObservableMatrix& m) {
  return {m.m01.real(), -m.m01.imag(), 0.5 * (m.m00.real() - m.m11.real())};
}

BlochVector rotate_observable(const LocalRotation& r, const BlochVector& d) {
  const double q0 = r.q0, q1 = r.q1, q2 = r.q2, q3 = r.q3;
  // Transpose of the rotation matrix of v ↦ q v q*.
  const double r00 = 1.0 - 2.0 * (q2 * q2 + q3 * q3);
  const double r01 = 2.0 * (q1 * q2 - q0 * q3);
  const double r02 = 2.0 * (q1 * q3 + q0 * q2);
  const double r10 = 2.0 * (q1 * q2 + q0 * q3);
  const double r11 = 1.0 - 2.0 * (q1 * q1 + q3 * q3);
  const double r12 = 2.0 * (q2 * q3 - q0 * q1);
  const double r20 = 2.0 * (q1 * q3 - q0 * q2);
  const double r21 = 2.0 * (q2 * q3 + q0 * q1);
  const double r22 = 1.0 - 2.0 * (q1 * q1 + q2 * q2);
  return {r00 * d.x + r10 * d.y + r20 * d.z, r01 * d.x + r11 * d.y + r21 * d.z,
          r02 * d.x + r12 * d.y + r22 * d.z};
}

double ghz_correlator(std::span<const ObservableMatrix> observables) {
  if (observables.empty()) {
    throw std::invalid_argument("ghz_correlator: empty observable list");
  }
  Complex p00(1.0), p01(1.0), p10(1.0), p11(1.0);
  for (const auto& o : observables) {
    p00 *= o.m00;
    p01 *= o.m01;
    p10 *= o.m10;
    p11 *= o.m11;
  }
  const Complex bracket = p00 + p01 + p10 + p11;
  if (std::abs(bracket.imag()) >= 1e-12) {
    throw std::domain_error("ghz_correlator: non-negligible imaginary part " +
                            std::to_string(bracket.imag()));
  }
  return 0.5 * bracket.real();
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s;
}

namespace {

void check_party_count(std::size_t n) {
  if (n < 1 || n > static_cast<std::size_t>(kMaxStatevectorParties)) {
    throw std::invalid_argument("statevector: party count " + std::to_string(n) +
                                " outside [1, " +
                                std::to_string(kMaxStatevectorParties) + "]");
  }
}

// Applies a single-qubit matrix to `party` in place.
void apply_local(Statevector& psi, int party, const Matrix2& u) {
  const std::size_t stride = std::size_t{1} << (psi.parties - 1 - party);
  const std::size_t size = psi.amplitudes.size();
  for (std::size_t base = 0; base < size; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      Complex& a0 = psi.amplitudes[base + off];
      Complex& a1 = psi.amplitudes[base + off + stride];
      const Complex b0 = u[0] * a0 + u[1] * a1;
      const Complex b1 = u[2] * a0 + u[3] * a1;
      a0 = b0;
      a1 = b1;
    }
  }
}

}  // namespace

Statevector ghz_state(int parties) {
  check_party_count(static_cast<std::size_t>(parties < 0 ? 0 : parties));
  Statevector psi{parties, std::vector<Complex>(std::size_t{1} << parties)};
  const double h = 1.0 / std::sqrt(2.0);
  psi.amplitudes.front() = h;
  psi.amplitudes.back() = h;
  return psi;
}

Statevector rotated_ghz_state(std::span<const LocalRotation> rotations) {
  check_party_count(rotations.size());
  Statevector psi = ghz_state(static_cast<int>(rotations.size()));
  for (std::size_t k = 0; k < rotations.size(); ++k) {
    apply_local(psi, static_cast<int>(k), to_matrix(rotations[k]));
  }
  return psi;
}

double statevector_expectation(std::span<const LocalRotation> rotations,
                               std::span<const ObservableMatrix> observables) {
  if (rotations.size() != observables.size()) {
    throw std::invalid_argument(
        "statevector_expectation: rotation/observable count mismatch");
  }
  const Statevector psi = rotated_ghz_state(rotations);
  Statevector phi = psi;
  for (std::size_t k = 0; k < observables.size(); ++k) {
    const auto& o = observables[k];
    apply_local(phi, static_cast<int>(k), {o.m00, o.m01, o.m10, o.m11});
  }
  Complex acc(0.0);
  for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) {
    acc += std::conj(psi.amplitudes[i]) * phi.amplitudes[i];
  }
  return acc.real();
}

}  // namespace ghzbell
