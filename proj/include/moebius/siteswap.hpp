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

// Siteswap juggling patterns: parsing, validity, canonicalization, counting,
// and exhaustive enumeration.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace moebius::siteswap {

/// A cyclic sequence of throw heights a_1..a_n (beats until the ball is
/// thrown again). Structural only; validity is a separate predicate.
struct SiteswapPattern {
  std::vector<std::uint64_t> throws;

  friend bool operator==(const SiteswapPattern&, const SiteswapPattern&) = default;
};

/// One throw per character: '0'-'9' are 0-9, 'a'-'z' are 10-35.
/// Reports the first invalid character and its 1-based position.
SiteswapPattern parse(std::string_view s);

/// Inverse of parse. Heights above 35 have no single-character form.
std::string format(const SiteswapPattern& p);

/// The first pair of throws whose landings collide, if any.
struct Collision {
  std::size_t first_position;   // 1-based positions of the colliding throws
  std::size_t second_position;
  std::uint64_t landing_beat;   // shared landing residue mod the period
};
std::optional<Collision> find_collision(const SiteswapPattern& p);

/// True iff all landing residues (i + a_i) mod n are pairwise distinct.
bool is_valid(const SiteswapPattern& p);

/// Average throw height; an exact integer for every valid pattern.
std::uint64_t ball_count(const SiteswapPattern& p);

/// Smallest d dividing the period with rotation by d reproducing the throws.
std::uint64_t fundamental_period(const SiteswapPattern& p);

/// The lexicographically greatest rotation. This is the form jugglers write:
/// 3001, never 0130.
SiteswapPattern canonical_rotation(const SiteswapPattern& p);

/// Rotation-distinct patterns of fundamental period n with fewer than b
/// balls. Exact by construction; an inexact division reports an internal
/// error.
mpz_class count_patterns_lt(std::uint64_t n, std::uint64_t b);

/// Rotation-distinct patterns of fundamental period n with exactly b balls.
mpz_class count_patterns_exact(std::uint64_t n, std::uint64_t b);

/// All patterns counted by count_patterns_exact, one canonical representative
/// per rotation class, sorted descending. Requires (b*n + 1)^n <= 10^7.
std::vector<SiteswapPattern> enumerate_patterns_exact(std::uint64_t n, std::uint64_t b);

/// Checks sum over d | n of d * count_patterns_lt(d, b) == b^n.
bool verify_bn_identity(std::uint64_t n, std::uint64_t b);

}  // namespace moebius::siteswap
