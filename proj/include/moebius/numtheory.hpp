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

// Elementary multiplicative number theory: factorization, divisors, the
// Moebius function mu, Euler's totient phi, and generic Moebius inversion.
// Everything here is a pure function of its inputs.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace moebius {

struct PrimePower {
  std::uint64_t prime;
  std::uint64_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer: primes strictly increasing,
/// every exponent >= 1, and the product of prime^exponent reconstructs n.
/// n = 1 is represented by an empty factor list.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;
};

/// Trial division up to sqrt(n). Accepts 1 <= n < 2^63.
Factorization factorize(std::uint64_t n);

/// mu(n): 1 for n = 1, (-1)^r for squarefree n with r prime factors, else 0.
int mu(std::uint64_t n);

/// All divisors of n, ascending, duplicate-free.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// phi(n), computed multiplicatively as prod p^(e-1) * (p - 1).
std::uint64_t euler_phi(std::uint64_t n);

/// Checks sum over d | n of phi(d) == n. True for every positive n.
bool gauss_identity_check(std::uint64_t n);

/// Given g on every divisor of n, returns sum over d | n of mu(n/d) * g(d),
/// i.e. the f with sum_{d|n} f(d) = g(n). Throws if a divisor is missing.
mpz_class mobius_invert(const std::map<std::uint64_t, mpz_class>& g_values, std::uint64_t n);

}  // namespace moebius
