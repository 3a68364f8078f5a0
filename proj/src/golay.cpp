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

#include "rsl/golay.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsl {

std::string to_string(PairVerdict v) {
    switch (v) {
        case PairVerdict::TrivialGolay: return "TRIVIAL_GOLAY";
        case PairVerdict::Golay: return "GOLAY";
        case PairVerdict::NearComplementaryOdd: return "NEAR_COMPLEMENTARY_ODD";
        case PairVerdict::NearComplementaryUneven: return "NEAR_COMPLEMENTARY_UNEVEN";
        case PairVerdict::NearComplementaryEven: return "NEAR_COMPLEMENTARY_EVEN";
        case PairVerdict::Neither: return "NEITHER";
    }
    return "?";
}

bool is_golay(const LittlewoodSeq& g, const LittlewoodSeq& h) {
    IntLaurent f = pair_energy(g, h);
    for (long long s = f.low; s <= f.high(); ++s)
        if (s != 0 && f.at(s) != 0) return false;
    return true;
}

bool is_golay(const CoeffSeq& g, const CoeffSeq& h) {
    LaurentPoly f = pair_energy(g, h);
    for (long long s = f.low; s <= f.high(); ++s)
        if (s != 0 && std::abs(f.at(s)) > 1e-9) return false;
    return true;
}

namespace {

std::vector<std::pair<long long, long long>> offpeak_support(const IntLaurent& f) {
    std::vector<std::pair<long long, long long>> out;
    for (long long s = f.low; s <= f.high(); ++s)
        if (s != 0 && f.at(s) != 0) out.emplace_back(s, f.at(s));
    return out;
}

}  // namespace

PairClass classify(const LittlewoodSeq& g, const LittlewoodSeq& h) {
    PairClass pc;
    pc.len_g = g.size();
    pc.len_h = h.size();
    IntLaurent f = pair_energy(g, h);
    pc.nonzero_offpeak = offpeak_support(f);
    pc.energy_norm = l2sq(f);
    bool golay = pc.nonzero_offpeak.empty();

    if (g.empty() || h.empty()) {
        // A pair with a zero member is a trivial Golay pair only when the
        // surviving member's autocorrelation is itself constant.
        pc.verdict = golay ? PairVerdict::TrivialGolay : PairVerdict::Neither;
        return pc;
    }

    std::size_t big = std::max(g.size(), h.size()), small = std::min(g.size(), h.size());
    if (big - small > 1)
        throw std::invalid_argument("classify: member lengths may differ by at most 1");

    if (golay) {
        pc.verdict = PairVerdict::Golay;
        if (big == small && small % 2 == 0) pc.min_energy_norm = min_pair_energy_norm(big, small, false);
        return pc;
    }

    auto offpeak_within = [&](long long cap) {
        for (const auto& [s, v] : pc.nonzero_offpeak)
            if (std::llabs(v) > cap) return false;
        return true;
    };

    if (big != small) {
        // uneven lengths m and m+1
        std::size_t m = small;
        if (m >= 1) pc.min_energy_norm = min_pair_energy_norm(big, small, false);
        pc.verdict = offpeak_within(1) ? PairVerdict::NearComplementaryUneven : PairVerdict::Neither;
        return pc;
    }

    std::size_t m = big;
    if (m % 2 == 1) {
        if (m > 1) pc.min_energy_norm = min_pair_energy_norm(m, m, false);
        pc.verdict = offpeak_within(2) ? PairVerdict::NearComplementaryOdd : PairVerdict::Neither;
        return pc;
    }

    pc.min_energy_norm = min_pair_energy_norm(m, m, true);
    if (m > 2) {
        // fast path backed by the structural characterization: exactly one
        // conjugate-symmetric off-peak monomial pair at +-m/2 of magnitude 2
        long long half = static_cast<long long>(m) / 2;
        bool ok = f.at(half) == f.at(-half) && std::llabs(f.at(half)) == 2;
        if (ok)
            for (long long s = f.low; s <= f.high(); ++s)
                if (s != 0 && s != half && s != -half && f.at(s) != 0) { ok = false; break; }
        pc.verdict = ok ? PairVerdict::NearComplementaryEven : PairVerdict::Neither;
        return pc;
    }
    // raw definition for m <= 2: at most two nonconstant monomials, each of
    // magnitude at most 2
    bool ok = pc.nonzero_offpeak.size() <= 2 && offpeak_within(2);
    pc.verdict = ok ? PairVerdict::NearComplementaryEven : PairVerdict::Neither;
    return pc;
}

long long min_pair_energy_norm(std::size_t len_g, std::size_t len_h, bool exclude_golay) {
    long long a = static_cast<long long>(std::max(len_g, len_h));
    long long b = static_cast<long long>(std::min(len_g, len_h));
    if (a == b && a % 2 == 1 && a > 1) {
        long long m = a;
        return (2 * m) * (2 * m) + 4 * (m - 1);
    }
    if (a == b + 1 && b >= 1) {
        long long m = b;
        return (2 * m + 1) * (2 * m + 1) + 2 * m;
    }
    if (a == b && a % 2 == 0 && a >= 2) {
        long long m = a;
        return (2 * m) * (2 * m) + (exclude_golay ? 8 : 0);
    }
    throw std::invalid_argument("min_pair_energy_norm: unsupported length shape");
}

std::vector<std::size_t> turyn_lengths(std::size_t max) {
    if (max < 1) throw std::invalid_argument("turyn_lengths: max must be >= 1");
    std::vector<std::size_t> out;
    for (std::size_t x = 1; x <= max; x *= 26) {
        for (std::size_t y = x; y <= max; y *= 10) {
            for (std::size_t z = y; z <= max; z *= 2) {
                out.push_back(z);
                if (z > max / 2) break;
            }
            if (y > max / 10) break;
        }
        if (x > max / 26) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<bool> golay_pair_known(std::size_t m) {
    if (m < 1) return false;
    if (m > 1 && m % 2 == 1) return false;  // parity obstruction at odd lengths
    auto t = turyn_lengths(m);
    if (std::binary_search(t.begin(), t.end(), m)) return true;
    if (m <= 100) return false;  // exhaustively excluded below 100
    return std::nullopt;
}

LengthBound thomas_bound(std::size_t length, std::optional<bool> golay_exists_at_half) {
    if (length < 1) throw std::invalid_argument("thomas_bound: length must be >= 1");
    LengthBound lb;
    lb.length = length;
    long long l = static_cast<long long>(length);

    if (length == 1) {
        lb.bound = Rational(1, 3);
        lb.case_tag = BoundCase::I;
        lb.attainability = "Golay interleaving";
        return lb;
    }
    if (length % 2 == 1) {
        lb.bound = Rational(1, 3) + Rational(4 * (l - 1), 3 * l * l);
        lb.case_tag = BoundCase::IV;
        lb.attainability = "near-complementary interleaving";
        return lb;
    }

    std::size_t m = length / 2;
    bool golay;
    if (golay_exists_at_half) {
        golay = *golay_exists_at_half;
        if (golay && m > 1 && m % 2 == 1)
            throw std::invalid_argument(
                "thomas_bound: no Golay pair can exist at odd half-length > 1");
    } else {
        auto known = golay_pair_known(m);
        if (!known)
            throw std::invalid_argument(
                "thomas_bound: Golay existence at half-length is open; pass the flag");
        golay = *known;
    }

    if (golay) {
        lb.bound = Rational(1, 3);
        lb.case_tag = BoundCase::II;
        lb.attainability = "Golay interleaving";
    } else if (length % 4 == 0) {
        lb.bound = Rational(1, 3) + Rational(32, 3 * l * l);
        lb.case_tag = BoundCase::III;
        lb.attainability = "near-complementary interleaving";
    } else {
        lb.bound = Rational(1, 3) + Rational(8 * (l - 2), 3 * l * l);
        lb.case_tag = BoundCase::V;
        lb.attainability = "near-complementary interleaving";
    }
    return lb;
}

namespace {

void require_golay(const LittlewoodSeq& g, const LittlewoodSeq& h, std::size_t min_len,
                   const char* who) {
    if (g.size() != h.size() || g.size() < min_len || !is_golay(g, h))
        throw std::invalid_argument(std::string(who) + ": input must be a binary Golay pair" +
                                    (min_len > 0 ? " of sufficient length" : ""));
}

LittlewoodSeq dropped(const LittlewoodSeq& a) {
    LittlewoodSeq r = a;
    r.signs.pop_back();
    return r;
}

LittlewoodSeq appended(const LittlewoodSeq& a, int u) {
    if (u != 1 && u != -1) throw std::invalid_argument("construction: appended sign must be +1 or -1");
    LittlewoodSeq r = a;
    r.signs.push_back(static_cast<std::int8_t>(u));
    return r;
}

}  // namespace

std::pair<LittlewoodSeq, LittlewoodSeq> construct_nc_shrink(const LittlewoodSeq& g,
                                                            const LittlewoodSeq& h) {
    require_golay(g, h, 3, "construct_nc_shrink");
    return {dropped(g), dropped(h)};
}

std::pair<LittlewoodSeq, LittlewoodSeq> construct_nc_extend(const LittlewoodSeq& g,
                                                            const LittlewoodSeq& h, int u, int v) {
    require_golay(g, h, 2, "construct_nc_extend");
    return {appended(g, u), appended(h, v)};
}

std::pair<LittlewoodSeq, LittlewoodSeq> construct_nc_uneven(const LittlewoodSeq& g,
                                                            const LittlewoodSeq& h, UnevenMode mode,
                                                            int u) {
    if (mode == UnevenMode::Shrink) {
        require_golay(g, h, 2, "construct_nc_uneven");
        return {dropped(g), h};
    }
    require_golay(g, h, 1, "construct_nc_uneven");
    return {appended(g, u), h};
}

std::pair<LittlewoodSeq, LittlewoodSeq> golay_double(const LittlewoodSeq& g,
                                                     const LittlewoodSeq& h) {
    require_golay(g, h, 1, "golay_double");
    LittlewoodSeq a = g, b = g;
    for (auto v : h.signs) a.signs.push_back(v);
    for (auto v : h.signs) b.signs.push_back(static_cast<std::int8_t>(-v));
    if (!is_golay(a, b)) throw std::logic_error("golay_double: doubling failed verification");
    return {a, b};
}

}  // namespace rsl
