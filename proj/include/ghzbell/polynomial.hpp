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

// Full-correlation Bell polynomials with exact dyadic coefficients.
//
// A term is identified by its prime mask: bit k set means party k uses its
// primed setting A'_k, clear means A_k. Every party contributes exactly one
// operator to every term.
//
// Normalization: every family has local-hidden-variable bound 1. For odd n
// the Mermin polynomial is defined to be MK_n. The generator expansion
// (1/(2^{(n+2)/2} i))[∏(a+ia') − ∏(a−ia')] is available for any n through
// mermin_generator_polynomial(); for odd n it uses normalization
// 2^{-(n-1)/2} and agrees with MK_n only up to a global sign and a prime
// swap: identical at n = 3, −prime_swap(MK_5) at n = 5, −MK_7 at n = 7.
// Bell values are unchanged by either relabelling.
//
// The algebraic maximum of M_n for odd n is 2^{(n-1)/2} (sum of |c|),
// which is what algebraic_max() returns; some texts quote 2^{n/2-1} here.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ghzbell {

/// Largest party count accepted by the polynomial constructors.
inline constexpr int kMaxPolynomialParties = 8;

using PrimeMask = std::uint32_t;

/// numerator / 2^exponent, kept in lowest terms.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t numerator, int exponent);

  static Dyadic integer(std::int64_t v) { return Dyadic(v, 0); }

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const;
  Dyadic abs() const { return Dyadic(num_ < 0 ? -num_ : num_, exp_); }
  std::string to_string() const;

  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  Dyadic half() const { return Dyadic(num_, exp_ + 1); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

enum class Family { Mermin, MK, Svetlichny };

std::string_view family_name(Family f);
/// Accepts "mermin", "mk", "svetlichny". Throws std::invalid_argument.
Family parse_family(std::string_view name);

struct BellTerm {
  PrimeMask prime_mask = 0;
  Dyadic coefficient;

  bool primed(int party) const { return (prime_mask >> party) & 1u; }
  int primed_count() const;

  friend bool operator==(const BellTerm&, const BellTerm&) = default;
};

/// Canonical term list: sorted by mask, unique masks, no zero coefficients.
class BellPolynomial {
 public:
  /// Merges duplicate masks and drops zeros. Throws std::invalid_argument if
  /// n is outside [1, kMaxPolynomialParties] or a mask has bits at or above n.
  BellPolynomial(int parties, Family family, const std::vector<BellTerm>& terms);

  int parties() const { return n_; }
  Family family() const { return family_; }
  const std::vector<BellTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of `mask`, zero if absent.
  Dyadic coefficient(PrimeMask mask) const;

  /// Human-readable form, e.g. "+1/2 a1 a2' ...".
  std::string to_string() const;

 private:
  int n_;
  Family family_;
  std::vector<BellTerm> terms_;
};

/// Term lists equal (family metadata ignored).
bool same_terms(const BellPolynomial& a, const BellPolynomial& b);

/// MK_n by the recursion MK_n = ½MK_{n−1}(a_n + a_n') + ½MK'_{n−1}(a_n − a_n'),
/// starting from CHSH. n in [2, kMaxPolynomialParties].
BellPolynomial mk_polynomial(int n);

/// Every prime flag inverted.
BellPolynomial prime_swap(const BellPolynomial& p);

/// Even n: the generator expansion. Odd n: MK_n (family tag Mermin).
BellPolynomial mermin_polynomial(int n);

/// Masks with odd primed count p, coefficient ±N, sign + for p ≡ 1 (mod 4),
/// N = 2^{-n/2} (n even) or 2^{-(n-1)/2} (n odd).
BellPolynomial mermin_generator_polynomial(int n);

/// Odd n: ½(MK_n + MK_n'). Even n: MK_n (family tag Svetlichny).
BellPolynomial svetlichny_polynomial(int n);

BellPolynomial make_polynomial(Family family, int n);

/// |Σ c·E(mask)|. Throws std::out_of_range if a mask is missing.
double evaluate(const BellPolynomial& p, const std::map<PrimeMask, double>& expectations);

/// |Σ c·E(mask)| with expectations produced on demand.
double evaluate(const BellPolynomial& p,
                const std::function<double(PrimeMask)>& expectation);

/// Signed sum Σ c·E(mask) before the absolute value.
double signed_sum(const BellPolynomial& p,
                  const std::function<double(PrimeMask)>& expectation);

/// Maximum of |Σ c ∏ outcomes| over all deterministic ±1 assignments of
/// (a_k, a'_k). Exact. Throws std::invalid_argument for n > 5.
Dyadic lhv_deterministic_max(const BellPolynomial& p);

/// Σ |c|.
Dyadic algebraic_max(const BellPolynomial& p);

}  // namespace ghzbell
