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

#ifndef RSL_LAURENT_HPP
#define RSL_LAURENT_HPP

#include "rsl/sequence.hpp"

#include <cstdint>
#include <vector>

namespace rsl {

/// Laurent polynomial with dense coefficients over the exponent interval
/// [low, low + coeffs.size() - 1].  The zero polynomial stores no
/// coefficients; otherwise the first and last stored coefficients are
/// nonzero.  Supports of interest are always intervals, so no sparsity
/// machinery.
template <class Scalar>
struct BasicLaurent {
    long long low = 0;
    std::vector<Scalar> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    long long high() const { return low + static_cast<long long>(coeffs.size()) - 1; }

    Scalar at(long long s) const {
        if (is_zero() || s < low || s > high()) return Scalar{};
        return coeffs[static_cast<std::size_t>(s - low)];
    }

    /// Drops zero coefficients at both ends; resets low to 0 when empty.
    void trim() {
        std::size_t b = 0, e = coeffs.size();
        while (b < e && coeffs[b] == Scalar{}) ++b;
        while (e > b && coeffs[e - 1] == Scalar{}) --e;
        coeffs = std::vector<Scalar>(coeffs.begin() + b, coeffs.begin() + e);
        low = coeffs.empty() ? 0 : low + static_cast<long long>(b);
    }

    bool operator==(const BasicLaurent&) const = default;
};

/// Complex coefficients: the general path.
using LaurentPoly = BasicLaurent<Complex>;

/// Exact integer coefficients: the Littlewood path.  All quantities the
/// binary theory needs (correlations, pair energies, norm numerators)
/// are integers that fit comfortably in 64 bits at the lengths we handle.
using IntLaurent = BasicLaurent<long long>;

inline IntLaurent add(const IntLaurent& a, const IntLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    IntLaurent r;
    r.low = std::min(a.low, b.low);
    long long hi = std::max(a.high(), b.high());
    r.coeffs.assign(static_cast<std::size_t>(hi - r.low + 1), 0);
    for (long long s = a.low; s <= a.high(); ++s) r.coeffs[static_cast<std::size_t>(s - r.low)] += a.at(s);
    for (long long s = b.low; s <= b.high(); ++s) r.coeffs[static_cast<std::size_t>(s - r.low)] += b.at(s);
    r.trim();
    return r;
}

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LaurentPoly r;
    r.low = std::min(a.low, b.low);
    long long hi = std::max(a.high(), b.high());
    r.coeffs.assign(static_cast<std::size_t>(hi - r.low + 1), Complex{});
    for (long long s = a.low; s <= a.high(); ++s) r.coeffs[static_cast<std::size_t>(s - r.low)] += a.at(s);
    for (long long s = b.low; s <= b.high(); ++s) r.coeffs[static_cast<std::size_t>(s - r.low)] += b.at(s);
    r.trim();
    return r;
}

}  // namespace rsl

#endif  // RSL_LAURENT_HPP
