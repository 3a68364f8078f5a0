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

#ifndef RSL_SEQUENCE_HPP
#define RSL_SEQUENCE_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace rsl {

using Complex = std::complex<double>;

/// Finite complex coefficient sequence identified with a polynomial:
/// coefficients[j] multiplies z^j.  The zero polynomial is the empty
/// sequence (length 0); a canonical nonzero polynomial has a nonzero
/// last coefficient, so length = 1 + degree.
using CoeffSeq = std::vector<Complex>;

/// A sequence over {+1, -1}, the binary specialization.  Text form is a
/// string over {+, -} with index 0 leftmost ("+++-"); the zero polynomial
/// is written "0" and stored as the empty sequence.
struct LittlewoodSeq {
    std::vector<std::int8_t> signs;  // each entry +1 or -1

    LittlewoodSeq() = default;
    explicit LittlewoodSeq(std::vector<std::int8_t> s);

    std::size_t size() const { return signs.size(); }
    bool empty() const { return signs.empty(); }
    int operator[](std::size_t j) const { return signs[j]; }

    bool operator==(const LittlewoodSeq&) const = default;
    auto operator<=>(const LittlewoodSeq&) const = default;

    CoeffSeq to_coeffs() const;
    std::string str() const;

    static LittlewoodSeq parse(const std::string& text);

    /// Recovers the sign sequence from a complex sequence; rejects any
    /// coefficient that is not exactly +1 or -1.
    static LittlewoodSeq from_coeffs(const CoeffSeq& a);

    /// True iff every coefficient of a is exactly +1 or -1.
    static bool is_littlewood(const CoeffSeq& a);
};

/// Parses either a Littlewood string ("+-+", "0") or a JSON list of
/// [re, im] pairs into a coefficient sequence.
CoeffSeq parse_coeff_seq(const std::string& text);

/// Renders a complex sequence as a JSON list of [re, im] pairs.
std::string format_coeff_seq(const CoeffSeq& a);

/// Littlewood string when all coefficients are +/-1, JSON otherwise.
std::string format_seq_auto(const CoeffSeq& a);

}  // namespace rsl

#endif  // RSL_SEQUENCE_HPP
