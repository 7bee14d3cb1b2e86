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

#include "moebius/bracelet.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "moebius/errors.hpp"
#include "moebius/mobiuspoly.hpp"
#include "moebius/numtheory.hpp"

namespace moebius::bracelet {

namespace {

constexpr std::uint64_t kEnumerationBudget = 10'000'000;

void check_word(const Word& w) {
  if (w.letters.empty()) throw std::invalid_argument("word must have at least one letter");
  if (w.alphabet_size == 0) throw std::invalid_argument("word alphabet must be nonempty");
  for (std::uint32_t c : w.letters)
    if (c >= w.alphabet_size)
      throw std::invalid_argument("letter " + std::to_string(c) + " outside alphabet of size " +
                                  std::to_string(w.alphabet_size));
}

void check_length(std::uint64_t n) {
  if (n == 0) throw std::domain_error("word length must be positive");
}

/// x^n when it fits the enumeration budget, otherwise a budget error.
std::uint64_t enumeration_size_or_throw(std::uint64_t n, std::uint64_t x) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (x != 0 && total > kEnumerationBudget / x)
      throw budget_error("enumerating " + std::to_string(x) + "^" + std::to_string(n) +
                         " words exceeds the budget of " + std::to_string(kEnumerationBudget));
    total *= x;
  }
  return total;
}

/// Visits all x^n words in lexicographic order (letter 0 most significant).
template <typename Fn>
void for_each_word(std::uint64_t n, std::uint64_t x, Fn&& fn) {
  if (x == 0) return;
  std::vector<std::uint32_t> letters(n, 0);
  const auto last = static_cast<std::uint32_t>(x - 1);
  while (true) {
    fn(letters);
    std::size_t i = n;
    while (i > 0 && letters[i - 1] == last) letters[--i] = 0;
    if (i == 0) break;
    ++letters[i - 1];
  }
}

bool has_period(const std::vector<std::uint32_t>& letters, std::uint64_t d) {
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i)
    if (letters[i] != letters[(i + d) % n]) return false;
  return true;
}

/// Proper divisors (sorted, excluding n itself); the candidates for a
/// nontrivial period.
std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> divs = divisors(n);
  divs.pop_back();
  return divs;
}

bool aperiodic_letters(const std::vector<std::uint32_t>& letters,
                       const std::vector<std::uint64_t>& proper_divs) {
  for (std::uint64_t d : proper_divs)
    if (has_period(letters, d)) return false;
  return true;
}

bool is_smallest_rotation(const std::vector<std::uint32_t>& w) {
  const std::size_t n = w.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t rotated = w[(i + k) % n];
      if (rotated < w[i]) return false;
      if (rotated > w[i]) break;
    }
  }
  return true;
}

}  // namespace

std::uint64_t fundamental_period(const Word& w) {
  check_word(w);
  for (std::uint64_t d : divisors(w.letters.size()))
    if (has_period(w.letters, d)) return d;
  return w.letters.size();  // d = n always matches; not reached
}

bool is_aperiodic(const Word& w) {
  return fundamental_period(w) == w.letters.size();
}

mpz_class count_aperiodic(std::uint64_t n, std::uint64_t x) {
  return MobiusPolynomial(n).eval_int(mpz_class(x));
}

mpz_class count_aperiodic_bruteforce(std::uint64_t n, std::uint64_t x) {
  check_length(n);
  enumeration_size_or_throw(n, x);
  const std::vector<std::uint64_t> proper_divs = proper_divisors(n);
  std::uint64_t count = 0;
  for_each_word(n, x, [&](const std::vector<std::uint32_t>& letters) {
    if (aperiodic_letters(letters, proper_divs)) ++count;
  });
  return mpz_class(count);
}

std::vector<std::vector<Word>> rotation_classes(std::uint64_t n, std::uint64_t x) {
  check_length(n);
  enumeration_size_or_throw(n, x);
  const std::vector<std::uint64_t> proper_divs = proper_divisors(n);
  std::vector<std::vector<Word>> classes;
  for_each_word(n, x, [&](const std::vector<std::uint32_t>& letters) {
    if (!aperiodic_letters(letters, proper_divs)) return;
    if (!is_smallest_rotation(letters)) return;
    // Aperiodic, so the n rotations of the representative are all distinct.
    std::vector<Word> members;
    members.reserve(n);
    std::vector<std::uint32_t> rotated = letters;
    for (std::uint64_t k = 0; k < n; ++k) {
      members.push_back(Word{x, rotated});
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    }
    classes.push_back(std::move(members));
  });
  return classes;
}

mpz_class count_total_necklaces(std::uint64_t n, std::uint64_t x) {
  check_length(n);
  mpz_class sum = 0;
  mpz_class power;
  for (std::uint64_t d : divisors(n)) {
    mpz_ui_pow_ui(power.get_mpz_t(), x, d);
    sum += mpz_class(euler_phi(n / d)) * power;
  }
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), n))
    throw std::logic_error("necklace count " + sum.get_str() + " not divisible by " +
                           std::to_string(n));
  mpz_class result;
  mpz_divexact_ui(result.get_mpz_t(), sum.get_mpz_t(), n);
  return result;
}

mpz_class count_total_necklaces_bruteforce(std::uint64_t n, std::uint64_t x) {
  check_length(n);
  enumeration_size_or_throw(n, x);
  std::uint64_t orbits = 0;
  for_each_word(n, x, [&](const std::vector<std::uint32_t>& letters) {
    if (is_smallest_rotation(letters)) ++orbits;
  });
  return mpz_class(orbits);
}

}  // namespace moebius::bracelet
