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

#include "moebius/siteswap.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "moebius/errors.hpp"
#include "moebius/mobiuspoly.hpp"
#include "moebius/numtheory.hpp"

namespace moebius::siteswap {

namespace {

constexpr std::uint64_t kEnumerationBudget = 10'000'000;

void check_structure(const SiteswapPattern& p) {
  if (p.throws.empty()) throw std::invalid_argument("siteswap pattern must have at least one throw");
}

void check_period(std::uint64_t n) {
  if (n == 0) throw std::domain_error("period must be positive");
}

mpz_class exact_quotient(const mpz_class& value, std::uint64_t n) {
  if (!mpz_divisible_ui_p(value.get_mpz_t(), n))
    throw std::logic_error("pattern count " + value.get_str() + " not divisible by period " +
                           std::to_string(n));
  mpz_class result;
  mpz_divexact_ui(result.get_mpz_t(), value.get_mpz_t(), n);
  return result;
}

/// True iff the rotation starting at offset a is lexicographically greater
/// than the rotation starting at offset b.
bool rotation_greater(const std::vector<std::uint64_t>& throws, std::size_t a, std::size_t b) {
  const std::size_t n = throws.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t va = throws[(a + i) % n];
    const std::uint64_t vb = throws[(b + i) % n];
    if (va != vb) return va > vb;
  }
  return false;
}

}  // namespace

SiteswapPattern parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("siteswap string is empty");
  SiteswapPattern p;
  p.throws.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= '0' && c <= '9')
      p.throws.push_back(static_cast<std::uint64_t>(c - '0'));
    else if (c >= 'a' && c <= 'z')
      p.throws.push_back(static_cast<std::uint64_t>(c - 'a') + 10);
    else
      throw std::invalid_argument(std::string("invalid throw character '") + c + "' at position " +
                                  std::to_string(i + 1));
  }
  return p;
}

std::string format(const SiteswapPattern& p) {
  check_structure(p);
  std::string out;
  out.reserve(p.throws.size());
  for (std::uint64_t t : p.throws) {
    if (t <= 9)
      out += static_cast<char>('0' + t);
    else if (t <= 35)
      out += static_cast<char>('a' + (t - 10));
    else
      throw std::domain_error("throw height " + std::to_string(t) +
                              " has no single-character form (max 35)");
  }
  return out;
}

std::optional<Collision> find_collision(const SiteswapPattern& p) {
  check_structure(p);
  const std::size_t n = p.throws.size();
  std::vector<std::size_t> owner(n, 0);  // 1-based thrower of each landing beat
  for (std::size_t i = 1; i <= n; ++i) {
    const std::uint64_t landing = (i % n + p.throws[i - 1] % n) % n;
    if (owner[landing] != 0) return Collision{owner[landing], i, landing};
    owner[landing] = i;
  }
  return std::nullopt;
}

bool is_valid(const SiteswapPattern& p) {
  return !find_collision(p).has_value();
}

std::uint64_t ball_count(const SiteswapPattern& p) {
  if (!is_valid(p))
    throw std::domain_error("ball_count requires a valid pattern (average height need not be integral)");
  std::uint64_t sum = 0;
  for (std::uint64_t t : p.throws) sum += t;
  assert(sum % p.throws.size() == 0);  // guaranteed by validity
  return sum / p.throws.size();
}

std::uint64_t fundamental_period(const SiteswapPattern& p) {
  check_structure(p);
  const std::size_t n = p.throws.size();
  for (std::uint64_t d : divisors(n)) {
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i)
      periodic = p.throws[i] == p.throws[(i + d) % n];
    if (periodic) return d;
  }
  return n;  // d = n always matches; not reached
}

SiteswapPattern canonical_rotation(const SiteswapPattern& p) {
  check_structure(p);
  const std::size_t n = p.throws.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (rotation_greater(p.throws, k, best)) best = k;
  SiteswapPattern out;
  out.throws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.throws.push_back(p.throws[(best + i) % n]);
  return out;
}

mpz_class count_patterns_lt(std::uint64_t n, std::uint64_t b) {
  check_period(n);
  return exact_quotient(MobiusPolynomial(n).eval_int(mpz_class(b)), n);
}

mpz_class count_patterns_exact(std::uint64_t n, std::uint64_t b) {
  check_period(n);
  const MobiusPolynomial poly(n);
  return exact_quotient(poly.eval_int(mpz_class(b) + 1) - poly.eval_int(mpz_class(b)), n);
}

std::vector<SiteswapPattern> enumerate_patterns_exact(std::uint64_t n, std::uint64_t b) {
  check_period(n);
  // The guard covers the nominal space of all height vectors in [0, b*n]^n.
  if (b != 0 && n > (std::numeric_limits<std::uint64_t>::max() - 1) / b)
    throw budget_error("enumeration space for period " + std::to_string(n) + " with " +
                       std::to_string(b) + " balls exceeds the budget");
  const std::uint64_t target = b * n;
  std::uint64_t space = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (space > kEnumerationBudget / (target + 1))
      throw budget_error("enumeration space (" + std::to_string(target + 1) + ")^" +
                         std::to_string(n) + " exceeds the budget of " +
                         std::to_string(kEnumerationBudget));
    space *= target + 1;
  }

  std::vector<SiteswapPattern> out;
  SiteswapPattern candidate;
  candidate.throws.assign(n, 0);
  // Sum-constrained depth-first walk, ascending lexicographic order.
  auto visit = [&](auto&& self, std::size_t pos, std::uint64_t remaining) -> void {
    if (pos + 1 == n) {
      candidate.throws[pos] = remaining;
      if (is_valid(candidate) && fundamental_period(candidate) == n &&
          candidate == canonical_rotation(candidate))
        out.push_back(candidate);
      return;
    }
    for (std::uint64_t v = 0; v <= remaining; ++v) {
      candidate.throws[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  visit(visit, 0, target);
  std::reverse(out.begin(), out.end());
  return out;
}

bool verify_bn_identity(std::uint64_t n, std::uint64_t b) {
  check_period(n);
  mpz_class lhs = 0;
  for (std::uint64_t d : divisors(n)) lhs += mpz_class(d) * count_patterns_lt(d, b);
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), b, n);
  return lhs == rhs;
}

}  // namespace moebius::siteswap
