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

#include "ghzbell/optimizer.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ghzbell {

std::string CandidateSpec::to_string() const {
  switch (kind) {
    case CandidateKind::Pauli: return "pauli";
    case CandidateKind::Tetrahedron: return "tetrahedron";
    case CandidateKind::Random: return "random:" + std::to_string(count);
    case CandidateKind::Custom: return "custom";
  }
  return "unknown";
}

CandidateSpec CandidateSpec::parse(const std::string& text) {
  if (text == "pauli") return {CandidateKind::Pauli, 3};
  if (text == "tetrahedron") return {CandidateKind::Tetrahedron, 4};
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    int k = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument("bad candidate count in '" + text + "'");
    }
    if (k < 2) throw std::invalid_argument("random candidates need k >= 2");
    return {CandidateKind::Random, k};
  }
  throw std::invalid_argument("unknown candidate set '" + text + "'");
}

int CandidateSpec::size() const {
  switch (kind) {
    case CandidateKind::Pauli: return 3;
    case CandidateKind::Tetrahedron: return 4;
    default: return count;
  }
}

CandidateSet pauli_candidates() {
  return {CandidateKind::Pauli, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

CandidateSet tetrahedron_candidates() {
  const double s = 1.0 / std::sqrt(3.0);
  return {CandidateKind::Tetrahedron,
          {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}}};
}

CandidateSet random_candidates(int k, RandomStream& stream) {
  if (k < 2) throw std::invalid_argument("random_candidates: k < 2");
  CandidateSet set{CandidateKind::Random, {}};
  set.directions.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) set.directions.push_back(uniform_direction(stream));
  return set;
}

CandidateSet custom_candidates(std::vector<BlochVector> directions) {
  if (directions.size() < 2) {
    throw std::invalid_argument("custom_candidates: need at least two directions");
  }
  for (const auto& d : directions) {
    if (!d.is_unit()) throw std::invalid_argument("custom_candidates: non-unit direction");
  }
  return {CandidateKind::Custom, std::move(directions)};
}

CandidateSet make_candidate_set(const CandidateSpec& spec, RandomStream& stream) {
  switch (spec.kind) {
    case CandidateKind::Pauli: return pauli_candidates();
    case CandidateKind::Tetrahedron: return tetrahedron_candidates();
    case CandidateKind::Random: return random_candidates(spec.count, stream);
    case CandidateKind::Custom: break;
  }
  throw std::invalid_argument("make_candidate_set: custom sets have no generator");
}

std::vector<PartySetting> party_options(std::size_t m, const EnumerationOptions& options) {
  std::vector<PartySetting> out;
  const std::vector<int> unprimed_signs =
      options.unprimed_sign_flips ? std::vector<int>{1, -1} : std::vector<int>{1};
  const std::vector<int> primed_signs =
      options.primed_sign_flips ? std::vector<int>{1, -1} : std::vector<int>{1};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (int s : unprimed_signs) {
        for (int sp : primed_signs) {
          out.push_back({static_cast<int>(i), static_cast<int>(j), s, sp});
        }
      }
    }
  }
  return out;
}

namespace {

const CandidateSet& set_for(std::span<const CandidateSet> sets, std::size_t party) {
  return sets.size() == 1 ? sets[0] : sets[party];
}

void check_sets(std::span<const CandidateSet> sets, int parties) {
  if (sets.size() != 1 && sets.size() != static_cast<std::size_t>(parties)) {
    throw std::invalid_argument("expected one candidate set or one per party");
  }
  for (const auto& s : sets) {
    if (s.size() < 2) throw std::invalid_argument("candidate set needs m >= 2");
  }
}

}  // namespace

AssignmentEnumerator::AssignmentEnumerator(std::span<const CandidateSet> sets,
                                           int parties,
                                           const EnumerationOptions& options) {
  if (parties < 1) throw std::invalid_argument("AssignmentEnumerator: parties < 1");
  check_sets(sets, parties);
  for (int k = 0; k < parties; ++k) {
    options_.push_back(party_options(set_for(sets, k).size(), options));
    count_ *= options_.back().size();
  }
  digits_.assign(static_cast<std::size_t>(parties), 0);
}

bool AssignmentEnumerator::next(MeasurementAssignment& out) {
  if (emitted_ == count_) return false;
  out.resize(options_.size());
  for (std::size_t k = 0; k < options_.size(); ++k) out[k] = options_[k][digits_[k]];
  ++emitted_;
  for (std::size_t k = options_.size(); k-- > 0;) {
    if (++digits_[k] < options_[k].size()) break;
    digits_[k] = 0;
  }
  return true;
}

MeasurementAssignment AssignmentEnumerator::at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("AssignmentEnumerator::at");
  MeasurementAssignment out(options_.size());
  for (std::size_t k = options_.size(); k-- > 0;) {
    const std::uint64_t radix = options_[k].size();
    out[k] = options_[k][index % radix];
    index /= radix;
  }
  return out;
}

std::uint64_t assignment_count(std::span<const CandidateSet> sets, int parties,
                               const EnumerationOptions& options) {
  check_sets(sets, parties);
  std::uint64_t total = 1;
  const std::uint64_t signs = (options.primed_sign_flips ? 2 : 1) *
                              (options.unprimed_sign_flips ? 2 : 1);
  for (int k = 0; k < parties; ++k) {
    const std::uint64_t m = set_for(sets, static_cast<std::size_t>(k)).size();
    total *= signs * m * (m - 1);
  }
  return total;
}

namespace {

// Cached entries of one party's option in the rotated frame. For a Bloch
// observable m00 = z, m11 = −z, m01 = w, m10 = conj(w).
struct OptionEntries {
  double z_a, z_p;
  Complex w_a, w_p;
};

// Contracts the coefficient tensor one party at a time. Level k holds
// T_k[r] = Σ c[mask] ∏_{j<k} entry_j(mask_j) indexed by the remaining mask
// bits r = mask >> k. The GHZ correlator of a term is
// ½[∏m00 + ∏m11] + ½[∏m01 + ∏m10] = δ_{n even}∏z + Re∏w,
// so the Bell sum is δ·Z_n + Re W_n.
class ContractionSearch {
 public:
  ContractionSearch(const BellPolynomial& p, std::span<const LocalRotation> rotations,
                    std::span<const CandidateSet> sets,
                    const EnumerationOptions& options)
      : n_(p.parties()), even_(p.parties() % 2 == 0) {
    for (int k = 0; k < n_; ++k) {
      const CandidateSet& set = set_for(sets, static_cast<std::size_t>(k));
      std::vector<BlochVector> rotated;
      rotated.reserve(set.size());
      for (const auto& d : set.directions) {
        rotated.push_back(rotate_observable(rotations[k], d));
      }
      settings_.push_back(party_options(set.size(), options));
      std::vector<OptionEntries> entries;
      entries.reserve(settings_.back().size());
      for (const auto& s : settings_.back()) {
        const BlochVector& a = rotated[s.base];
        const BlochVector& b = rotated[s.primed_base];
        entries.push_back({s.sign * a.z, s.primed_sign * b.z,
                           double(s.sign) * Complex(a.x, -a.y),
                           double(s.primed_sign) * Complex(b.x, -b.y)});
      }
      entries_.push_back(std::move(entries));
    }
    w_.resize(static_cast<std::size_t>(n_) + 1);
    z_.resize(static_cast<std::size_t>(n_) + 1);
    for (int k = 0; k <= n_; ++k) {
      const std::size_t size = std::size_t{1} << (n_ - k);
      w_[k].assign(size, Complex(0.0));
      z_[k].assign(size, 0.0);
    }
    for (const auto& t : p.terms()) {
      w_[0][t.prime_mask] = t.coefficient.to_double();
      z_[0][t.prime_mask] = t.coefficient.to_double();
    }
    choice_.assign(static_cast<std::size_t>(n_), 0);
    best_choice_.assign(static_cast<std::size_t>(n_), 0);
  }

  OptimizationOutcome run() {
    descend(0);
    OptimizationOutcome out;
    out.bell_value = best_;
    out.evaluations = evaluations_;
    for (int k = 0; k < n_; ++k) out.assignment.push_back(settings_[k][best_choice_[k]]);
    return out;
  }

 private:
  void descend(int k) {
    if (k == n_ - 1) {
      scan_last_party();
      return;
    }
    const auto& src_w = w_[k];
    const auto& src_z = z_[k];
    auto& dst_w = w_[k + 1];
    auto& dst_z = z_[k + 1];
    const std::size_t half = dst_w.size();
    for (std::size_t o = 0; o < entries_[k].size(); ++o) {
      const OptionEntries& e = entries_[k][o];
      for (std::size_t r = 0; r < half; ++r) {
        dst_w[r] = src_w[2 * r] * e.w_a + src_w[2 * r + 1] * e.w_p;
        dst_z[r] = src_z[2 * r] * e.z_a + src_z[2 * r + 1] * e.z_p;
      }
      choice_[k] = o;
      descend(k + 1);
    }
  }

  void scan_last_party() {
    const int k = n_ - 1;
    const Complex w0 = w_[k][0], w1 = w_[k][1];
    const double z0 = even_ ? z_[k][0] : 0.0;
    const double z1 = even_ ? z_[k][1] : 0.0;
    const auto& opts = entries_[k];
    for (std::size_t o = 0; o < opts.size(); ++o) {
      const OptionEntries& e = opts[o];
      const double re = w0.real() * e.w_a.real() - w0.imag() * e.w_a.imag() +
                        w1.real() * e.w_p.real() - w1.imag() * e.w_p.imag();
      const double v = std::abs(re + z0 * e.z_a + z1 * e.z_p);
      if (v > best_) {
        best_ = v;
        choice_[k] = o;
        best_choice_ = choice_;
      }
    }
    evaluations_ += opts.size();
  }

  int n_;
  bool even_;
  std::vector<std::vector<PartySetting>> settings_;
  std::vector<std::vector<OptionEntries>> entries_;
  std::vector<std::vector<Complex>> w_;
  std::vector<std::vector<double>> z_;
  std::vector<std::size_t> choice_;
  std::vector<std::size_t> best_choice_;
  double best_ = -1.0;
  std::uint64_t evaluations_ = 0;
};

void check_dimensions(const BellPolynomial& p, std::span<const LocalRotation> rotations,
                      std::span<const CandidateSet> sets) {
  if (rotations.size() != static_cast<std::size_t>(p.parties())) {
    throw std::invalid_argument("max_bell_value: " + std::to_string(rotations.size()) +
                                " rotations for a " + std::to_string(p.parties()) +
                                "-party polynomial");
  }
  check_sets(sets, p.parties());
}

}  // namespace

OptimizationOutcome max_bell_value(const BellPolynomial& p,
                                   std::span<const LocalRotation> rotations,
                                   std::span<const CandidateSet> sets,
                                   const EnumerationOptions& options) {
  check_dimensions(p, rotations, sets);
  if (p.parties() < 2) throw std::invalid_argument("max_bell_value: n < 2");
  return ContractionSearch(p, rotations, sets, options).run();
}

OptimizationOutcome max_bell_value(const BellPolynomial& p,
                                   std::span<const LocalRotation> rotations,
                                   const CandidateSet& set,
                                   const EnumerationOptions& options) {
  return max_bell_value(p, rotations, std::span<const CandidateSet>(&set, 1), options);
}

double assignment_bell_value(const BellPolynomial& p,
                             std::span<const LocalRotation> rotations,
                             std::span<const CandidateSet> sets,
                             const MeasurementAssignment& assignment) {
  check_dimensions(p, rotations, sets);
  const std::size_t n = rotations.size();
  if (assignment.size() != n) {
    throw std::invalid_argument("assignment_bell_value: assignment size mismatch");
  }
  std::vector<ObservableMatrix> unprimed, primed;
  for (std::size_t k = 0; k < n; ++k) {
    const CandidateSet& set = set_for(sets, k);
    const PartySetting& s = assignment[k];
    const BlochVector a = rotate_observable(rotations[k], set.directions.at(s.base));
    const BlochVector b =
        rotate_observable(rotations[k], set.directions.at(s.primed_base));
    const ObservableMatrix ma = observable_matrix(a);
    const ObservableMatrix mb = observable_matrix(b);
    unprimed.push_back(s.sign > 0 ? ma : -ma);
    primed.push_back(s.primed_sign > 0 ? mb : -mb);
  }
  std::vector<ObservableMatrix> ops(n);
  return evaluate(p, [&](PrimeMask mask) {
    for (std::size_t k = 0; k < n; ++k) {
      ops[k] = ((mask >> k) & 1u) ? primed[k] : unprimed[k];
    }
    return ghz_correlator(ops);
  });
}

}  // namespace ghzbell
