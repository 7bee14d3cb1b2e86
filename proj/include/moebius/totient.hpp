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

// Congruence verifiers for the Fermat and Euler theorems. Everything runs
// through modular exponentiation; a^(p^e) is never materialized.

#pragma once

#include <cstdint>
#include <vector>

namespace moebius::totient {

/// x^p == x (mod p). Holds for every integer x when p is prime.
bool verify_fermat(std::uint64_t p, std::int64_t x);

/// a^(p^e) == a^(p^(e-1)) (mod p^e). Holds for ALL integers a, coprime or
/// not. Requires p^e to fit in 64 bits.
bool verify_euler_special(std::uint64_t p, std::uint64_t e, std::int64_t a);

/// One prime-power stage of the general Euler derivation. Both residues are
/// 0 whenever gcd(a, n) = 1.
struct EulerStep {
  std::uint64_t prime;
  std::uint64_t exponent;
  std::uint64_t prime_power;     // p^e
  std::uint64_t special_residue; // (a^(p^e) - a^(p^(e-1))) mod p^e
  std::uint64_t euler_residue;   // (a^(phi(p^e)) - 1) mod p^e
};

/// A checkable transcript of the derivation a^phi(n) == 1 (mod n): the
/// special case per prime power, the factored-out coprime step, and the
/// combined final residue. If a stage ever failed, the offending residue
/// pinpoints it.
struct EulerCertificate {
  std::int64_t base;
  std::uint64_t modulus;
  std::uint64_t totient;        // phi(modulus)
  std::vector<EulerStep> steps;
  std::uint64_t final_residue;  // a^phi(n) mod n; equals 1 mod n when coprime
};

/// Requires gcd(a, n) = 1.
EulerCertificate verify_euler_general(std::int64_t a, std::uint64_t n);

}  // namespace moebius::totient
