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

#include "moebius/ffpoly.hpp"

#include <stdexcept>

#include "moebius/errors.hpp"
#include "moebius/mobiuspoly.hpp"
#include "moebius/modarith.hpp"
#include "moebius/numtheory.hpp"

namespace moebius::ffpoly {

namespace {

constexpr std::uint64_t kEnumerationBudget = 10'000'000;
constexpr std::uint64_t kMaxModulus = 97;

void check_modulus(std::uint64_t p) {
  if (p > kMaxModulus)
    throw std::domain_error("modulus " + std::to_string(p) + " exceeds the cap of " +
                            std::to_string(kMaxModulus));
  if (!is_prime(p)) throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
}

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
}

void check_degree(std::uint64_t n) {
  if (n == 0) throw std::domain_error("degree must be positive");
}

void check_same_modulus(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()));
}

mpz_class exact_quotient(const mpz_class& value, std::uint64_t n) {
  if (!mpz_divisible_ui_p(value.get_mpz_t(), n))
    throw std::logic_error("irreducible count " + value.get_str() + " not divisible by degree " +
                           std::to_string(n));
  mpz_class result;
  mpz_divexact_ui(result.get_mpz_t(), value.get_mpz_t(), n);
  return result;
}

std::uint64_t power_or_budget_error(std::uint64_t p, std::uint64_t n) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (total > kEnumerationBudget / p)
      throw budget_error("enumerating " + std::to_string(p) + "^" + std::to_string(n) +
                         " polynomials exceeds the budget of " + std::to_string(kEnumerationBudget));
    total *= p;
  }
  return total;
}

}  // namespace

FpPoly::FpPoly(std::uint64_t p, const std::vector<std::uint64_t>& coefficients) : p_(p) {
  check_modulus(p);
  coeffs_.reserve(coefficients.size());
  for (std::uint64_t c : coefficients) coeffs_.push_back(static_cast<std::uint32_t>(c % p));
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string FpPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const std::uint32_t c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += (i == 1) ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

FpPoly multiply(const FpPoly& a, const FpPoly& b) {
  check_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.modulus());
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> prod(a.coefficients().size() + b.coefficients().size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    for (std::size_t j = 0; j < b.coefficients().size(); ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coefficients()[i]} * b.coefficients()[j]) % p;
  return FpPoly(p, prod);
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  check_same_modulus(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly::zero(p), a};

  std::vector<std::uint64_t> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<std::uint64_t> quot(a.degree() - b.degree() + 1, 0);
  const std::uint64_t lead_inv = pow_mod(b.coefficients().back(), p - 2, p);
  for (std::size_t d = rem.size(); d-- > static_cast<std::size_t>(b.degree());) {
    const std::uint64_t c = rem[d];
    if (c == 0) continue;
    const std::uint64_t q = c * lead_inv % p;
    const std::size_t shift = d - b.degree();
    quot[shift] = q;
    for (std::size_t i = 0; i < b.coefficients().size(); ++i)
      rem[shift + i] = (rem[shift + i] + p - q * b.coefficients()[i] % p) % p;
  }
  return {FpPoly(p, quot), FpPoly(p, rem)};
}

FpPoly remainder(const FpPoly& a, const FpPoly& b) {
  return divmod(a, b).second;
}

bool is_irreducible(const FpPoly& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw std::invalid_argument("irreducibility test requires a monic polynomial of degree >= 1");
  const std::uint64_t p = f.modulus();
  const int half = f.degree() / 2;
  power_or_budget_error(p, half);  // trial division is itself an enumeration
  std::vector<std::uint64_t> divisor;
  for (int k = 1; k <= half; ++k) {
    // all monic candidates of degree k, by odometer over the low coefficients
    divisor.assign(k + 1, 0);
    divisor[k] = 1;
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::uint64_t rest = v;
      for (int j = 0; j < k; ++j) {
        divisor[j] = rest % p;
        rest /= p;
      }
      if (remainder(f, FpPoly(p, divisor)).is_zero()) return false;
    }
  }
  return true;
}

std::vector<FpPoly> enumerate_monic_irreducible(std::uint64_t p, std::uint64_t n) {
  check_modulus(p);
  check_degree(n);
  const std::uint64_t total = power_or_budget_error(p, n);
  std::vector<FpPoly> out;
  std::vector<std::uint64_t> coeffs(n + 1, 0);
  coeffs[n] = 1;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint64_t rest = v;
    for (std::uint64_t j = 0; j < n; ++j) {
      coeffs[j] = rest % p;
      rest /= p;
    }
    FpPoly f(p, coeffs);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

mpz_class count_irreducible(std::uint64_t p, std::uint64_t n) {
  check_prime(p);
  check_degree(n);
  return exact_quotient(MobiusPolynomial(n).eval_int(mpz_class(p)), n);
}

mpz_class count_irreducible_ext(std::uint64_t p, std::uint64_t e, std::uint64_t n) {
  check_prime(p);
  check_degree(n);
  if (e == 0) throw std::domain_error("extension degree must be positive");
  mpz_class field_size;
  mpz_ui_pow_ui(field_size.get_mpz_t(), p, e);
  return exact_quotient(MobiusPolynomial(n).eval_int(field_size), n);
}

bool verify_pn_identity(std::uint64_t p, std::uint64_t n) {
  check_prime(p);
  check_degree(n);
  mpz_class lhs = 0;
  for (std::uint64_t d : divisors(n)) lhs += mpz_class(d) * count_irreducible(p, d);
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), p, n);
  return lhs == rhs;
}

}  // namespace moebius::ffpoly
