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

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace moebius {

/// The polynomial sum over d | n of mu(n/d) * x^d, stored sparsely.
///
/// Only the nonzero terms are materialized: one per divisor d whose cofactor
/// n/d is squarefree, so a polynomial with r distinct prime factors has
/// exactly 2^r terms, all with coefficient -1 or +1. The leading term is
/// always x^n and the smallest exponent is prod p_i^(e_i - 1).
///
/// Immutable after construction; all evaluation methods are const and safe
/// to call concurrently.
class MobiusPolynomial {
 public:
  struct Term {
    std::uint64_t exponent;
    int coefficient;  // -1 or +1

    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Builds the polynomial for index n; accepts 1 <= n < 2^63.
  explicit MobiusPolynomial(std::uint64_t n);

  std::uint64_t index() const { return n_; }

  /// Terms in ascending exponent order.
  const std::vector<Term>& terms() const { return terms_; }

  /// Exact evaluation over the integers. No overflow at any operand size.
  mpz_class eval_int(const mpz_class& x) const;

  /// Value mod m in [0, m), via per-term modular exponentiation. Negative x
  /// is reduced to its canonical residue first.
  std::uint64_t eval_mod(std::int64_t x, std::uint64_t m) const;

  /// Floating-point evaluation; each power is computed by repeated squaring,
  /// which keeps the error near machine epsilon for |z| = 1.
  std::complex<double> eval_complex(std::complex<double> z) const;

  /// Multiplicity of the root at 0, i.e. the smallest exponent present;
  /// equals prod p_i^(e_i - 1) over the prime factorization of the index.
  std::uint64_t root_multiplicity_at_zero() const;

  /// Text form with descending exponents, e.g. "x^12 - x^6 - x^4 + x^2".
  std::string to_string() const;

 private:
  std::uint64_t n_;
  std::vector<Term> terms_;  // ascending exponent
};

std::ostream& operator<<(std::ostream& os, const MobiusPolynomial& p);

}  // namespace moebius
