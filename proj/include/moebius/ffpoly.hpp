/*
   Copyright 2026 the moebius project authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Dense polynomials over small prime fields F_p, brute-force irreducibility
// by trial division, and the closed-form count of monic irreducibles. The
// trial-division route deliberately shares no structure with the formula it
// cross-checks.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace moebius::ffpoly {

/// Polynomial over F_p with p a prime <= 97. Coefficients are canonical
/// residues indexed by degree, with the top entry nonzero; the zero
/// polynomial has an empty coefficient vector and degree -1.
class FpPoly {
 public:
  /// Reduces the given coefficients mod p and strips leading zeros.
  FpPoly(std::uint64_t p, const std::vector<std::uint64_t>& coefficients);

  static FpPoly zero(std::uint64_t p) { return FpPoly(p, {}); }

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficients by ascending degree; empty for the zero polynomial.
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }

  /// Coefficient of x^degree (0 beyond the actual degree).
  std::uint32_t coefficient(std::size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : 0;
  }

  /// Descending text form, e.g. "x^4 + x + 1" or "2x^2 + x + 2"; "0" when zero.
  std::string to_string() const;

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  std::uint64_t p_;
  std::vector<std::uint32_t> coeffs_;
};

/// Product with coefficients reduced mod p. Moduli must match.
FpPoly multiply(const FpPoly& a, const FpPoly& b);

/// Quotient and remainder of a by b (b nonzero): a = q*b + r, deg r < deg b.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);

/// Remainder of a mod b.
FpPoly remainder(const FpPoly& a, const FpPoly& b);

/// Trial division by every monic polynomial of degree 1..deg(f)/2.
/// Requires f monic of degree >= 1.
bool is_irreducible(const FpPoly& f);

/// All monic irreducible polynomials of degree exactly n over F_p, sorted by
/// descending-degree coefficient sequence. Requires p^n <= 10^7.
std::vector<FpPoly> enumerate_monic_irreducible(std::uint64_t p, std::uint64_t n);

/// Number of monic irreducible polynomials of degree exactly n over F_p
/// (closed form; exact division by construction).
mpz_class count_irreducible(std::uint64_t p, std::uint64_t n);

/// Same count over the field with p^e elements, by formula only.
mpz_class count_irreducible_ext(std::uint64_t p, std::uint64_t e, std::uint64_t n);

/// Checks sum over d | n of d * count_irreducible(p, d) == p^n.
bool verify_pn_identity(std::uint64_t p, std::uint64_t n);

}  // namespace moebius::ffpoly
