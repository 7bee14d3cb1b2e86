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

#include "moebius/mobiuspoly.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

#include "moebius/modarith.hpp"
#include "moebius/numtheory.hpp"

namespace moebius {

MobiusPolynomial::MobiusPolynomial(std::uint64_t n) : n_(n) {
  const Factorization f = factorize(n);  // also validates the range of n
  const std::size_t r = f.factors.size();

  // The nonzero terms are exactly the divisors d = n/s with s a squarefree
  // product of the distinct primes of n; the coefficient is mu(s).
  terms_.reserve(std::size_t{1} << r);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < r; ++i)
      if ((mask >> i) & 1) s *= f.factors[i].prime;
    terms_.push_back({n / s, (std::popcount(mask) % 2 == 0) ? +1 : -1});
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
}

mpz_class MobiusPolynomial::eval_int(const mpz_class& x) const {
  mpz_class acc = 0;
  mpz_class power;
  for (const Term& t : terms_) {
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), t.exponent);
    if (t.coefficient > 0)
      acc += power;
    else
      acc -= power;
  }
  return acc;
}

std::uint64_t MobiusPolynomial::eval_mod(std::int64_t x, std::uint64_t m) const {
  if (m == 0) throw std::domain_error("eval_mod: modulus must be positive");
  const std::uint64_t base = mod_reduce(x, m);
  std::uint64_t acc = 0;
  for (const Term& t : terms_) {
    const std::uint64_t p = pow_mod(base, t.exponent, m);
    acc = (t.coefficient > 0) ? (acc + p) % m : (acc + (m - p)) % m;
  }
  return acc;
}

namespace {

std::complex<double> complex_pow(std::complex<double> z, std::uint64_t e) {
  std::complex<double> acc{1.0, 0.0};
  while (e != 0) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

}  // namespace

std::complex<double> MobiusPolynomial::eval_complex(std::complex<double> z) const {
  std::complex<double> acc{0.0, 0.0};
  for (const Term& t : terms_)
    acc += static_cast<double>(t.coefficient) * complex_pow(z, t.exponent);
  return acc;
}

std::uint64_t MobiusPolynomial::root_multiplicity_at_zero() const {
  return terms_.front().exponent;
}

std::string MobiusPolynomial::to_string() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (out.empty()) {
      if (it->coefficient < 0) out += '-';
    } else {
      out += (it->coefficient < 0) ? " - " : " + ";
    }
    out += (it->exponent == 1) ? "x" : "x^" + std::to_string(it->exponent);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MobiusPolynomial& p) {
  return os << p.to_string();
}

}  // namespace moebius
