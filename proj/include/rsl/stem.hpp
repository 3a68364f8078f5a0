// Copyright 2026 the rsltools authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSL_STEM_HPP
#define RSL_STEM_HPP

#include "rsl/poly_core.hpp"

#include <optional>
#include <vector>

namespace rsl {

/// The per-step +/-1 choices of the recursion, first step first.  Text
/// form is a string over {+, -}.
using SignSequence = LittlewoodSeq;

/// A seed, the signs used, and the generated members f_0..f_n.
/// len f_k = 2^k * len f_0 throughout.
struct Stem {
    CoeffSeq seed;
    SignSequence signs;
    std::vector<CoeffSeq> polynomials;
};

/// One doubling step: f(z) + sigma * z^len(f) * f_dagger(-z).  The
/// constant coefficient of f must be nonzero so the conjugate reciprocal
/// keeps the degree.
CoeffSeq rsl_step(const CoeffSeq& f, int sigma);
LittlewoodSeq rsl_step(const LittlewoodSeq& f, int sigma);

/// Iterates rsl_step `steps` times; requires steps <= len(signs).
Stem rsl_stem(const CoeffSeq& seed, const SignSequence& signs, int steps);

/// The sign choices that reproduce Shapiro's classical family from seed 1:
/// first sign +1, then alternating starting with +1.
SignSequence shapiro_signs(int n);

/// Closed-form limit of the demerit factors along any stem grown from
/// this seed; depends only on the seed, never on the signs.  Always
/// >= 1/3, with equality exactly when the seed deinterleaves to a Golay
/// complementary pair.
Rational limiting_adf(const LittlewoodSeq& seed);
double limiting_adf(const CoeffSeq& seed);

/// The same limit computed through the interleaved pair (g, h): reads
/// only the pair energy.  Agrees with limiting_adf(interleave(g, h)).
Rational limiting_adf_pair(const LittlewoodSeq& g, const LittlewoodSeq& h);
double limiting_adf_pair(const CoeffSeq& g, const CoeffSeq& h);

struct TracePoint {
    int step = 0;
    std::size_t length = 0;
    double adf_value = 0.0;
    std::optional<Rational> adf_exact;  // set on the binary path
};

struct ConvergenceTrace {
    std::vector<TracePoint> points;
    double limit = 0.0;
    std::optional<Rational> limit_exact;
};

/// Demerit factor of every stem member of length <= max_len, paired with
/// the closed-form limit.  Stem members beyond max_len are never built.
ConvergenceTrace convergence_trace(const CoeffSeq& seed, const SignSequence& signs,
                                   std::size_t max_len);

}  // namespace rsl

#endif  // RSL_STEM_HPP
