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

#include "ghzbell/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ghzbell {

Dyadic::Dyadic(std::int64_t numerator, int exponent)
    : num_(numerator), exp_(exponent) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
}

double Dyadic::to_double() const {
  return std::ldexp(static_cast<double>(num_), -exp_);
}

std::string Dyadic::to_string() const {
  if (exp_ <= 0) return std::to_string(num_ * (std::int64_t{1} << -exp_));
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.exp_, b.exp_);
  return Dyadic(a.num_ * (std::int64_t{1} << (e - a.exp_)) +
                    b.num_ * (std::int64_t{1} << (e - b.exp_)),
                e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.exp_, b.exp_);
  return a.num_ * (std::int64_t{1} << (e - a.exp_)) <=>
         b.num_ * (std::int64_t{1} << (e - b.exp_));
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Mermin: return "mermin";
    case Family::MK: return "mk";
    case Family::Svetlichny: return "svetlichny";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "mermin") return Family::Mermin;
  if (name == "mk") return Family::MK;
  if (name == "svetlichny") return Family::Svetlichny;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

int BellTerm::primed_count() const { return std::popcount(prime_mask); }

BellPolynomial::BellPolynomial(int parties, Family family,
                               const std::vector<BellTerm>& terms)
    : n_(parties), family_(family) {
  if (parties < 1 || parties > kMaxPolynomialParties) {
    throw std::invalid_argument("BellPolynomial: party count " +
                                std::to_string(parties) + " out of range");
  }
  std::map<PrimeMask, Dyadic> merged;
  for (const auto& t : terms) {
    if ((t.prime_mask >> parties) != 0) {
      throw std::invalid_argument("BellPolynomial: mask exceeds party count");
    }
    merged[t.prime_mask] = merged[t.prime_mask] + t.coefficient;
  }
  for (const auto& [mask, c] : merged) {
    if (!c.is_zero()) terms_.push_back({mask, c});
  }
}

Dyadic BellPolynomial::coefficient(PrimeMask mask) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mask,
      [](const BellTerm& t, PrimeMask m) { return t.prime_mask < m; });
  if (it != terms_.end() && it->prime_mask == mask) return it->coefficient;
  return {};
}

std::string BellPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << ' ';
    first = false;
    const Dyadic c = t.coefficient;
    os << (c < Dyadic{} ? '-' : '+') << c.abs().to_string();
    for (int k = 0; k < n_; ++k) {
      os << " a" << (k + 1) << (t.primed(k) ? "'" : "");
    }
  }
  return os.str();
}

bool same_terms(const BellPolynomial& a, const BellPolynomial& b) {
  return a.parties() == b.parties() && a.terms() == b.terms();
}

namespace {

void check_range(int n, const char* what) {
  if (n < 2 || n > kMaxPolynomialParties) {
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " outside [2, " +
                                std::to_string(kMaxPolynomialParties) + "]");
  }
}

BellPolynomial retag(const BellPolynomial& p, Family family) {
  return BellPolynomial(p.parties(), family, p.terms());
}

BellPolynomial chsh() {
  const Dyadic h(1, 1);
  return BellPolynomial(2, Family::MK,
                        {{0b00, h}, {0b01, h}, {0b10, h}, {0b11, -h}});
}

}  // namespace

BellPolynomial mk_polynomial(int n) {
  check_range(n, "mk_polynomial");
  BellPolynomial current = chsh();
  for (int k = 3; k <= n; ++k) {
    const BellPolynomial swapped = prime_swap(current);
    const PrimeMask last = PrimeMask{1} << (k - 1);
    std::vector<BellTerm> terms;
    // ½ MK (a_k + a_k')
    for (const auto& t : current.terms()) {
      terms.push_back({t.prime_mask, t.coefficient.half()});
      terms.push_back({t.prime_mask | last, t.coefficient.half()});
    }
    // ½ MK' (a_k − a_k')
    for (const auto& t : swapped.terms()) {
      terms.push_back({t.prime_mask, t.coefficient.half()});
      terms.push_back({t.prime_mask | last, -t.coefficient.half()});
    }
    current = BellPolynomial(k, Family::MK, terms);
  }
  return current;
}

BellPolynomial prime_swap(const BellPolynomial& p) {
  const PrimeMask all = (PrimeMask{1} << p.parties()) - 1;
  std::vector<BellTerm> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.prime_mask ^ all, t.coefficient});
  return BellPolynomial(p.parties(), p.family(), terms);
}

BellPolynomial mermin_generator_polynomial(int n) {
  check_range(n, "mermin_generator_polynomial");
  const int exponent = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  std::vector<BellTerm> terms;
  for (PrimeMask mask = 0; mask < (PrimeMask{1} << n); ++mask) {
    const int p = std::popcount(mask);
    if (p % 2 == 0) continue;
    terms.push_back({mask, Dyadic(p % 4 == 1 ? 1 : -1, exponent)});
  }
  return BellPolynomial(n, Family::Mermin, terms);
}

BellPolynomial mermin_polynomial(int n) {
  check_range(n, "mermin_polynomial");
  if (n % 2 == 1) return retag(mk_polynomial(n), Family::Mermin);
  return mermin_generator_polynomial(n);
}

BellPolynomial svetlichny_polynomial(int n) {
  check_range(n, "svetlichny_polynomial");
  const BellPolynomial mk = mk_polynomial(n);
  if (n % 2 == 0) return retag(mk, Family::Svetlichny);
  std::vector<BellTerm> terms;
  for (const auto& t : mk.terms()) terms.push_back({t.prime_mask, t.coefficient.half()});
  const BellPolynomial swapped = prime_swap(mk);
  for (const auto& t : swapped.terms()) {
    terms.push_back({t.prime_mask, t.coefficient.half()});
  }
  return BellPolynomial(n, Family::Svetlichny, terms);
}

BellPolynomial make_polynomial(Family family, int n) {
  switch (family) {
    case Family::Mermin: return mermin_polynomial(n);
    case Family::MK: return mk_polynomial(n);
    case Family::Svetlichny: return svetlichny_polynomial(n);
  }
  throw std::invalid_argument("make_polynomial: unknown family");
}

double signed_sum(const BellPolynomial& p,
                  const std::function<double(PrimeMask)>& expectation) {
  double sum = 0.0;
  for (const auto& t : p.terms()) {
    sum += t.coefficient.to_double() * expectation(t.prime_mask);
  }
  return sum;
}

double evaluate(const BellPolynomial& p,
                const std::function<double(PrimeMask)>& expectation) {
  return std::abs(signed_sum(p, expectation));
}

double evaluate(const BellPolynomial& p,
                const std::map<PrimeMask, double>& expectations) {
  return evaluate(p, [&](PrimeMask mask) {
    auto it = expectations.find(mask);
    if (it == expectations.end()) {
      throw std::out_of_range("evaluate: no expectation for mask " +
                              std::to_string(mask));
    }
    return it->second;
  });
}

Dyadic lhv_deterministic_max(const BellPolynomial& p) {
  const int n = p.parties();
  if (n > 5) {
    throw std::invalid_argument("lhv_deterministic_max: n > 5 is not enumerated");
  }
  // Bits 2k and 2k+1 of `strategy` select the signs of a_k and a'_k.
  Dyadic best;
  for (std::uint32_t strategy = 0; strategy < (1u << (2 * n)); ++strategy) {
    Dyadic sum;
    for (const auto& t : p.terms()) {
      int sign = 1;
      for (int k = 0; k < n; ++k) {
        const int bit = 2 * k + (t.primed(k) ? 1 : 0);
        if ((strategy >> bit) & 1u) sign = -sign;
      }
      sum = sign > 0 ? sum + t.coefficient : sum - t.coefficient;
    }
    best = std::max(best, sum.abs());
  }
  return best;
}

Dyadic algebraic_max(const BellPolynomial& p) {
  Dyadic total;
  for (const auto& t : p.terms()) total = total + t.coefficient.abs();
  return total;
}

}  // namespace ghzbell
