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

#include "moebius/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace moebius {

namespace {

void check_argument_range(std::uint64_t n) {
  if (n == 0) throw std::domain_error("argument must be a positive integer");
  if (n >= (std::uint64_t{1} << 63))
    throw std::domain_error("argument " + std::to_string(n) + " out of range (must be < 2^63)");
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  check_argument_range(n);
  Factorization result;
  result.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2) ? 1 : 2) {
    if (rest % p != 0) continue;
    std::uint64_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (rest > 1) result.factors.push_back({rest, 1});
  return result;
}

int mu(std::uint64_t n) {
  const Factorization f = factorize(n);
  for (const PrimePower& pp : f.factors)
    if (pp.exponent > 1) return 0;
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::vector<std::uint64_t> divs{1};
  for (const PrimePower& pp : f.factors) {
    const std::size_t existing = divs.size();
    std::uint64_t power = 1;
    for (std::uint64_t e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = 1;
  for (const PrimePower& pp : factorize(n).factors) {
    std::uint64_t power = 1;
    for (std::uint64_t e = 1; e < pp.exponent; ++e) power *= pp.prime;
    phi *= power * (pp.prime - 1);
  }
  return phi;
}

bool gauss_identity_check(std::uint64_t n) {
  check_argument_range(n);
  std::uint64_t sum = 0;
  for (std::uint64_t d : divisors(n)) sum += euler_phi(d);
  return sum == n;
}

mpz_class mobius_invert(const std::map<std::uint64_t, mpz_class>& g_values, std::uint64_t n) {
  mpz_class f = 0;
  for (std::uint64_t d : divisors(n)) {
    const auto it = g_values.find(d);
    if (it == g_values.end())
      throw std::invalid_argument("mobius_invert: no value for divisor " + std::to_string(d) +
                                  " of " + std::to_string(n));
    switch (mu(n / d)) {
      case 1:
        f += it->second;
        break;
      case -1:
        f -= it->second;
        break;
      default:
        break;
    }
  }
  return f;
}

}  // namespace moebius
