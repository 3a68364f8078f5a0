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

#ifndef RSL_GOLAY_HPP
#define RSL_GOLAY_HPP

#include "rsl/poly_core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rsl {

enum class PairVerdict {
    TrivialGolay,           // at least one member is the zero polynomial
    Golay,                  // pair energy constant, both members nonzero
    NearComplementaryOdd,   // equal odd length, |f_s| <= 2 off the constant
    NearComplementaryUneven,// lengths m and m+1, |f_s| <= 1 off the constant
    NearComplementaryEven,  // equal even length, at most two nonconstant monomials of magnitude <= 2
    Neither,
};

std::string to_string(PairVerdict v);

/// Classification result for a pair (g, h): the verdict, the lengths, the
/// nonzero nonconstant pair-energy coefficients that witness it, and the
/// attained vs. minimum achievable energy norm where the shape admits one.
struct PairClass {
    PairVerdict verdict = PairVerdict::Neither;
    std::size_t len_g = 0;
    std::size_t len_h = 0;
    std::vector<std::pair<long long, long long>> nonzero_offpeak;  // (shift, coefficient)
    long long energy_norm = 0;                     // l2sq of the pair energy
    std::optional<long long> min_energy_norm;      // bound for this length shape
};

/// True iff every nonconstant coefficient of |g|^2 + |h|^2 vanishes.
/// The binary/integer test is exact.
bool is_golay(const LittlewoodSeq& g, const LittlewoodSeq& h);
/// Float variant: nonconstant coefficients must have magnitude <= 1e-9.
bool is_golay(const CoeffSeq& g, const CoeffSeq& h);

/// Full taxonomy for a pair of Littlewood (or zero) polynomials.  Lengths
/// of two nonzero members may differ by at most one; anything else is
/// outside the taxonomy and rejected.
PairClass classify(const LittlewoodSeq& g, const LittlewoodSeq& h);

/// Lower bound on l2sq(pair_energy) over Littlewood pairs of the given
/// length shape: equal odd m > 1, lengths m+1 and m with m > 0, or equal
/// even m (exclude_golay picks the non-Golay branch).
long long min_pair_energy_norm(std::size_t len_g, std::size_t len_h, bool exclude_golay);

enum class BoundCase { I, II, III, IV, V };

struct LengthBound {
    std::size_t length = 0;
    Rational bound;
    BoundCase case_tag = BoundCase::I;
    std::string attainability;  // "Golay interleaving" / "near-complementary interleaving"
};

/// Exact lower bound on the limiting demerit factor over Littlewood seeds
/// of the given length.  For even lengths the relevant Golay-existence
/// fact at half length is resolved internally up to half length 100
/// (known length set plus the exhaustive-search exclusion below 100);
/// beyond that the caller must pass the flag.
LengthBound thomas_bound(std::size_t length,
                         std::optional<bool> golay_exists_at_half = std::nullopt);

/// Whether a binary Golay pair of length m is known to exist (m a product
/// of powers of 2, 10, and 26; resolves definitively for m <= 100 and for
/// all odd m, where a parity obstruction rules pairs out).  Returns
/// nullopt for even m > 100 not in the known set: existence is open.
std::optional<bool> golay_pair_known(std::size_t m);

/// All integers <= max of the form 2^a * 10^b * 26^c, sorted.
std::vector<std::size_t> turyn_lengths(std::size_t max);

/// Drops the last coefficient of both members of a Golay pair of length
/// m > 2, leaving a near-complementary pair of odd length m - 1.
std::pair<LittlewoodSeq, LittlewoodSeq> construct_nc_shrink(const LittlewoodSeq& g,
                                                            const LittlewoodSeq& h);

/// Appends u to g and v to h of a Golay pair of length m >= 2, giving a
/// near-complementary pair of odd length m + 1.
std::pair<LittlewoodSeq, LittlewoodSeq> construct_nc_extend(const LittlewoodSeq& g,
                                                            const LittlewoodSeq& h, int u, int v);

enum class UnevenMode { Shrink, Extend };

/// Uneven constructions: shrink drops g's last coefficient (m > 1),
/// extend appends u to g (m > 0); either way the result is a
/// near-complementary pair of uneven lengths.
std::pair<LittlewoodSeq, LittlewoodSeq> construct_nc_uneven(const LittlewoodSeq& g,
                                                            const LittlewoodSeq& h, UnevenMode mode,
                                                            int u = 1);

/// Concatenation doubling (g|h, g|-h): maps a Golay pair of length m to
/// one of length 2m; the output is re-verified before being returned.
std::pair<LittlewoodSeq, LittlewoodSeq> golay_double(const LittlewoodSeq& g,
                                                     const LittlewoodSeq& h);

}  // namespace rsl

#endif  // RSL_GOLAY_HPP
