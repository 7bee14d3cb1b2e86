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

// Sampling MobiusPolynomial values on the complex unit circle: root-of-unity
// zero detection, symmetry reports, and CSV/SVG export of the curves.
//
// The default tolerance of 1e-9 is comfortable: a polynomial with r distinct
// prime factors has 2^r unit-modulus terms, each power computed by repeated
// squaring, so the evaluation error stays within a few hundred epsilon for
// every index this module accepts (n <= 10^4).

#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace moebius::circle {

/// One evaluation point z = e^(i*theta) and the polynomial value there.
struct CircleSample {
  double theta;
  std::complex<double> value;
};

/// Samples the curve at theta = 2*pi*k/samples for k = 0..samples-1, plus the
/// closing point theta = 2*pi. Requires samples >= 2 and n <= 10^4.
std::vector<CircleSample> sample_circle(std::uint64_t n, std::uint64_t samples);

/// A root of unity e^(2*pi*i*j/k) where the polynomial vanishes within
/// tolerance. Reported in lowest terms (gcd(j, k) = 1), so each complex
/// value appears once. A hit with tol/10 <= |value| < tol is flagged
/// borderline instead of being silently included or dropped.
struct UnitRootZero {
  std::uint64_t order;  // k
  std::uint64_t index;  // j
  std::complex<double> value;
  bool borderline;
};

/// Tests every k-th root of unity for k = 1..max_order (max 64).
std::vector<UnitRootZero> unit_root_zeros(std::uint64_t n, std::uint64_t max_order, double tol);

struct SymmetryReport {
  bool odd_symmetry;        // M(-z) = -M(z) at all trial points
  bool even_symmetry;       // M(-z) =  M(z)
  bool conjugate_symmetry;  // M(conj z) = conj M(z)
  std::uint64_t rotation_order;  // largest k <= 64 with M(wz) = w*M(z), w = e^(2*pi*i/k)
};

/// Evaluates the symmetry identities at `trials` fixed-seed pseudo-random
/// points on the unit circle, so reports are reproducible.
SymmetryReport check_symmetries(std::uint64_t n, std::uint64_t trials, double tol);

/// Header "theta,re,im", then one row per sample. Values are written in
/// shortest round-trip decimal form, so re-parsing reproduces them exactly.
void export_csv(const std::vector<CircleSample>& samples, std::ostream& out);
void export_csv(const std::vector<CircleSample>& samples, const std::filesystem::path& destination);

/// A single polyline through the samples, auto-scaled viewport with a 5%
/// margin, origin axes drawn. All-equal samples expand to a unit box.
void export_svg(const std::vector<CircleSample>& samples, std::ostream& out);
void export_svg(const std::vector<CircleSample>& samples, const std::filesystem::path& destination);

}  // namespace moebius::circle
