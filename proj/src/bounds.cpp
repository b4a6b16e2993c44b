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

#include "ghzbell/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ghzbell {

Crossing classify(double value, double bound, double tol) {
  if (value > bound + tol) return Crossing::Exceeded;
  if (std::abs(value - bound) <= tol) return Crossing::Met;
  return Crossing::Below;
}

std::string_view crossing_name(Crossing c) {
  switch (c) {
    case Crossing::Below: return "below";
    case Crossing::Met: return "met";
    case Crossing::Exceeded: return "exceeded";
  }
  return "unknown";
}

std::optional<double> BoundsTable::find(std::string_view label) const {
  for (const auto& t : thresholds) {
    if (t.label == label) return t.value;
  }
  return std::nullopt;
}

double BoundsTable::at(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw std::out_of_range("BoundsTable: no threshold '" + std::string(label) + "'");
}

double mk_entanglement_bound(int m) { return std::pow(2.0, (m - 1) / 2.0); }

double svetlichny_membership_bound(int n, int m) {
  return n % 2 == 0 ? std::pow(2.0, (n - m) / 2.0)
                    : std::pow(2.0, (n - m - 1) / 2.0);
}

double ghz_quantum_value(int n, Family family) {
  const bool odd = n % 2 == 1;
  switch (family) {
    case Family::MK: return std::pow(2.0, (n - 1) / 2.0);
    case Family::Mermin:
      return odd ? std::pow(2.0, (n - 1) / 2.0) : std::pow(2.0, n / 2.0 - 1.0);
    case Family::Svetlichny:
      return odd ? std::pow(2.0, (n - 2) / 2.0) : std::pow(2.0, (n - 1) / 2.0);
  }
  throw std::invalid_argument("ghz_quantum_value: unknown family");
}

bool is_demonstration_label(std::string_view label) {
  return label != "AlgebraicMax" && label != "GhzQuantumValue";
}

BoundsTable bounds_table(int n, Family family) {
  if (n < 2 || n > kMaxPolynomialParties) {
    throw std::invalid_argument("bounds_table: n = " + std::to_string(n) +
                                " unsupported");
  }
  BoundsTable table;
  table.n = n;
  table.family = family;
  table.lhv_bound = 1.0;

  const bool mk_like =
      family == Family::MK || (family == Family::Mermin && n % 2 == 1);
  if (mk_like) {
    if (n <= kMaxGmeLadderParties) {
      for (int m = 1; m <= n - 1; ++m) {
        table.thresholds.push_back(
            {"GME(" + std::to_string(m + 1) + ")", mk_entanglement_bound(m)});
      }
    } else {
      table.thresholds.push_back(
          {"GME(" + std::to_string(n) + ")", std::pow(2.0, n / 2.0 - 1.0)});
    }
  } else if (family == Family::Svetlichny) {
    for (int l = 1; l <= n - 1; ++l) {
      table.thresholds.push_back(
          {"Sep(" + std::to_string(l) + ")",
           std::max(table.lhv_bound, svetlichny_membership_bound(n, l + 1))});
    }
  }
  table.thresholds.push_back(
      {"AlgebraicMax", algebraic_max(make_polynomial(family, n)).to_double()});
  table.thresholds.push_back({"GhzQuantumValue", ghz_quantum_value(n, family)});
  return table;
}

}  // namespace ghzbell
