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

#include "ghzbell/restricted.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ghzbell/optimizer.hpp"

namespace ghzbell {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr BlochVector kSigma1{1, 0, 0};
constexpr BlochVector kSigma2{0, 1, 0};
}  // namespace

RestrictedScenario::RestrictedScenario(std::vector<double> theta)
    : theta_(std::move(theta)),
      total_(std::accumulate(theta_.begin(), theta_.end(), 0.0)) {
  if (theta_.empty()) throw std::invalid_argument("RestrictedScenario: no parties");
}

RestrictedScenario RestrictedScenario::even_split(int n, double total) {
  if (n < 1) throw std::invalid_argument("RestrictedScenario: n < 1");
  return RestrictedScenario(std::vector<double>(static_cast<std::size_t>(n), total / n));
}

std::vector<LocalRotation> RestrictedScenario::rotations() const {
  std::vector<LocalRotation> out;
  out.reserve(theta_.size());
  for (double t : theta_) out.push_back(LocalRotation::about_z(t));
  return out;
}

double restricted_expectation(double total, int primed_count) {
  return std::cos(total - primed_count * kPi / 2.0);
}

double restricted_expectation(const RestrictedScenario& scenario, PrimeMask mask) {
  return restricted_expectation(scenario.total(), std::popcount(mask));
}

double restricted_mermin_value(int n, double total, RestrictedStrategy strategy) {
  if (n < 2) throw std::invalid_argument("restricted_mermin_value: n < 2");
  const double prefactor =
      n % 2 == 1 ? std::pow(2.0, (n - 1) / 2.0) : std::pow(2.0, n / 2.0 - 1.0);
  return prefactor * std::abs(strategy == RestrictedStrategy::A ? std::sin(total)
                                                                : std::cos(total));
}

double restricted_svetlichny_strategy_value(int n, double total,
                                            RestrictedStrategy strategy) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("restricted_svetlichny: n must be odd and >= 3");
  }
  const double x = strategy == RestrictedStrategy::A ? total : total + kPi / 2.0;
  const double branch =
      n % 4 == 1 ? std::sin(x) + std::cos(x) : std::sin(x) - std::cos(x);
  return std::pow(2.0, (n - 3) / 2.0) * std::abs(branch);
}

double restricted_svetlichny_value(int n, double total) {
  return std::max(restricted_svetlichny_strategy_value(n, total, RestrictedStrategy::A),
                  restricted_svetlichny_strategy_value(n, total, RestrictedStrategy::B));
}

double restricted_mk_even_value(int n, double total) {
  if (n < 2 || n % 2 == 1) {
    throw std::invalid_argument("restricted_mk_even_value: n must be even and >= 2");
  }
  return std::max(restricted_mermin_value(n, total, RestrictedStrategy::A),
                  restricted_mermin_value(n, total, RestrictedStrategy::B));
}

bool violation_condition(int n, double total) {
  return std::abs(std::sin(total)) > 1.0 / std::pow(2.0, (n - 1) / 2.0);
}

StrategySettings strategy_settings(int n, Family family, RestrictedStrategy strategy) {
  if (n < 2) throw std::invalid_argument("strategy_settings: n < 2");
  const auto count = static_cast<std::size_t>(n);
  StrategySettings s{std::vector<BlochVector>(count, kSigma1),
                     std::vector<BlochVector>(count, kSigma2)};
  if (strategy == RestrictedStrategy::A) return s;
  const bool full_swap = n % 2 == 1 && family != Family::Svetlichny;
  if (full_swap) {
    std::swap(s.unprimed, s.primed);
  } else {
    s.unprimed[0] = kSigma2;
    s.primed[0] = -kSigma1;
  }
  return s;
}

double strategy_bell_value(const BellPolynomial& p, const RestrictedScenario& scenario,
                           const StrategySettings& settings) {
  const int n = p.parties();
  if (scenario.parties() != n || settings.unprimed.size() != static_cast<std::size_t>(n) ||
      settings.primed.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("strategy_bell_value: party count mismatch");
  }
  const auto rotations = scenario.rotations();
  std::vector<ObservableMatrix> unprimed, primed;
  for (int k = 0; k < n; ++k) {
    unprimed.push_back(observable_matrix(rotate_observable(rotations[k], settings.unprimed[k])));
    primed.push_back(observable_matrix(rotate_observable(rotations[k], settings.primed[k])));
  }
  std::vector<ObservableMatrix> ops(static_cast<std::size_t>(n));
  return evaluate(p, [&](PrimeMask mask) {
    for (int k = 0; k < n; ++k) ops[k] = ((mask >> k) & 1u) ? primed[k] : unprimed[k];
    return ghz_correlator(ops);
  });
}

double restricted_threshold(int n, Family family) {
  if (n % 2 == 1) {
    return family == Family::Svetlichny ? std::pow(2.0, (n - 3) / 2.0)
                                        : std::pow(2.0, n / 2.0 - 1.0);
  }
  return family == Family::Mermin ? 1.0 : std::pow(2.0, n / 2.0 - 1.0);
}

std::vector<SweepRow> restricted_sweep(int n, Family family, int grid) {
  if (grid < 1) throw std::invalid_argument("restricted_sweep: grid < 1");
  if (n < 2 || n > kMaxPolynomialParties) {
    throw std::invalid_argument("restricted_sweep: n out of range");
  }
  const BellPolynomial poly = make_polynomial(family, n);
  const CandidateSet plane = custom_candidates({kSigma1, kSigma2});
  const double threshold = restricted_threshold(n, family);
  const bool odd_svetlichny = family == Family::Svetlichny && n % 2 == 1;

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) {
    SweepRow row;
    row.theta = 2.0 * kPi * k / grid;
    if (odd_svetlichny) {
      row.strategy_a = restricted_svetlichny_strategy_value(n, row.theta, RestrictedStrategy::A);
      row.strategy_b = restricted_svetlichny_strategy_value(n, row.theta, RestrictedStrategy::B);
    } else {
      row.strategy_a = restricted_mermin_value(n, row.theta, RestrictedStrategy::A);
      row.strategy_b = restricted_mermin_value(n, row.theta, RestrictedStrategy::B);
    }
    row.analytic_max = std::max(row.strategy_a, row.strategy_b);
    const auto rotations = RestrictedScenario::even_split(n, row.theta).rotations();
    row.optimizer_max = max_bell_value(poly, rotations, plane).bell_value;
    row.threshold = threshold;
    row.analytic_status = classify(row.analytic_max, threshold);
    row.optimizer_status = classify(row.optimizer_max, threshold);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ghzbell
