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

#ifndef RSL_POLY_CORE_HPP
#define RSL_POLY_CORE_HPP

#include "rsl/laurent.hpp"
#include "rsl/rational.hpp"
#include "rsl/sequence.hpp"

#include <utility>

namespace rsl {

// Every operation here is a pure function over immutable values; all
// correlation products are O(len^2) direct summation so the binary path
// stays exact.

/// Conjugate reciprocal: coefficient j of the result is conj(a_{d-j}).
CoeffSeq conj_reciprocal(const CoeffSeq& a);
LittlewoodSeq conj_reciprocal(const LittlewoodSeq& a);

/// a(-z): coefficient j multiplied by (-1)^j.
CoeffSeq alternate(const CoeffSeq& a);
LittlewoodSeq alternate(const LittlewoodSeq& a);

/// Interleaving g(z^2) + z h(z^2); requires len g in {len h, len h + 1}.
CoeffSeq interleave(const CoeffSeq& g, const CoeffSeq& h);
LittlewoodSeq interleave(const LittlewoodSeq& g, const LittlewoodSeq& h);

/// Inverse of interleave: even positions to the first member, odd to the
/// second.  Requires len f >= 1.
std::pair<CoeffSeq, CoeffSeq> deinterleave(const CoeffSeq& f);
std::pair<LittlewoodSeq, LittlewoodSeq> deinterleave(const LittlewoodSeq& f);

/// The Laurent product f(z) * conj(g(z)); coefficient at shift s is
/// sum_j f_{j+s} conj(g_j).
LaurentPoly crosscorrelation(const CoeffSeq& f, const CoeffSeq& g);
IntLaurent crosscorrelation(const LittlewoodSeq& f, const LittlewoodSeq& g);

/// |a(z)|^2 = a(z) conj(a(z)); the coefficient at shift s is the
/// aperiodic autocorrelation of a at s.
LaurentPoly autocorrelation(const CoeffSeq& a);
IntLaurent autocorrelation(const LittlewoodSeq& a);

/// Aperiodic autocorrelation at a single shift; out-of-range terms zero.
Complex acf_value(const CoeffSeq& a, long long s);
long long acf_value(const LittlewoodSeq& a, long long s);

/// Plain polynomial product a(z) b(z), viewed at exponents 0..da+db.
LaurentPoly poly_product(const CoeffSeq& a, const CoeffSeq& b);
IntLaurent poly_product(const LittlewoodSeq& a, const LittlewoodSeq& b);

/// Sum of squared coefficient magnitudes, which equals the squared L^2
/// norm of the Laurent polynomial on the unit circle.
double l2sq(const LaurentPoly& p);
long long l2sq(const IntLaurent& p);

/// Squared L^4 norm to the fourth power: sum_s |C_{a,a}(s)|^2.
double l4_4(const CoeffSeq& a);
long long l4_4(const LittlewoodSeq& a);

/// Autocorrelation demerit factor: sum_{s != 0} |C(s)|^2 / |C(0)|^2.
/// The binary overload is exact; a must be nonzero.
double adf(const CoeffSeq& a);
Rational adf(const LittlewoodSeq& a);

/// |g(z)|^2 + |h(z)|^2.
LaurentPoly pair_energy(const CoeffSeq& g, const CoeffSeq& h);
IntLaurent pair_energy(const LittlewoodSeq& g, const LittlewoodSeq& h);

}  // namespace rsl

#endif  // RSL_POLY_CORE_HPP
