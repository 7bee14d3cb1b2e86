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

// Periodicity analysis and enumeration of circular words under rotation.
// Counting goes two independent ways: closed-form through MobiusPolynomial,
// and exhaustive enumeration as the cross-checking oracle.

#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace moebius::bracelet {

/// A fixed-length word over the alphabet {0, ..., alphabet_size - 1},
/// read as a circular arrangement.
struct Word {
  std::uint64_t alphabet_size = 0;
  std::vector<std::uint32_t> letters;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Smallest d dividing the length such that rotating by d letters reproduces
/// the word. Always a divisor of the length.
std::uint64_t fundamental_period(const Word& w);

/// True iff the fundamental period equals the full length.
bool is_aperiodic(const Word& w);

/// Number of aperiodic words of length n over x letters (closed form).
mpz_class count_aperiodic(std::uint64_t n, std::uint64_t x);

/// Same count by enumerating all x^n words; requires x^n <= 10^7.
mpz_class count_aperiodic_bruteforce(std::uint64_t n, std::uint64_t x);

/// Partitions the aperiodic words of length n over x letters into rotation
/// orbits. Every class has exactly n members; the lexicographically smallest
/// rotation comes first, followed by successive left rotations. Classes are
/// ordered by their representative. Requires x^n <= 10^7.
std::vector<std::vector<Word>> rotation_classes(std::uint64_t n, std::uint64_t x);

/// Number of rotation-distinct words of length n over x letters (periodic
/// ones included): (1/n) * sum over d | n of phi(n/d) * x^d. The division is
/// always exact; an inexact division reports an internal error.
mpz_class count_total_necklaces(std::uint64_t n, std::uint64_t x);

/// Oracle for count_total_necklaces: counts rotation orbits of all words by
/// enumeration. Requires x^n <= 10^7.
mpz_class count_total_necklaces_bruteforce(std::uint64_t n, std::uint64_t x);

}  // namespace moebius::bracelet
