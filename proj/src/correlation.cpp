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

#include "rsl/poly_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsl {

CoeffSeq conj_reciprocal(const CoeffSeq& a) {
    CoeffSeq r(a.rbegin(), a.rend());
    for (auto& c : r) c = std::conj(c);
    return r;
}

LittlewoodSeq conj_reciprocal(const LittlewoodSeq& a) {
    LittlewoodSeq r;
    r.signs.assign(a.signs.rbegin(), a.signs.rend());
    return r;
}

CoeffSeq alternate(const CoeffSeq& a) {
    CoeffSeq r = a;
    for (std::size_t j = 1; j < r.size(); j += 2) r[j] = -r[j];
    return r;
}

LittlewoodSeq alternate(const LittlewoodSeq& a) {
    LittlewoodSeq r = a;
    for (std::size_t j = 1; j < r.signs.size(); j += 2) r.signs[j] = -r.signs[j];
    return r;
}

namespace {

void check_interleave_lengths(std::size_t lg, std::size_t lh) {
    if (lg != lh && lg != lh + 1)
        throw std::invalid_argument("interleave: len g must be len h or len h + 1");
}

}  // namespace

CoeffSeq interleave(const CoeffSeq& g, const CoeffSeq& h) {
    check_interleave_lengths(g.size(), h.size());
    CoeffSeq f(g.size() + h.size());
    for (std::size_t j = 0; j < g.size(); ++j) f[2 * j] = g[j];
    for (std::size_t j = 0; j < h.size(); ++j) f[2 * j + 1] = h[j];
    return f;
}

LittlewoodSeq interleave(const LittlewoodSeq& g, const LittlewoodSeq& h) {
    check_interleave_lengths(g.size(), h.size());
    LittlewoodSeq f;
    f.signs.resize(g.size() + h.size());
    for (std::size_t j = 0; j < g.size(); ++j) f.signs[2 * j] = g.signs[j];
    for (std::size_t j = 0; j < h.size(); ++j) f.signs[2 * j + 1] = h.signs[j];
    return f;
}

std::pair<CoeffSeq, CoeffSeq> deinterleave(const CoeffSeq& f) {
    if (f.empty()) throw std::invalid_argument("deinterleave: len f must be >= 1");
    CoeffSeq g, h;
    for (std::size_t j = 0; j < f.size(); ++j) (j % 2 == 0 ? g : h).push_back(f[j]);
    return {std::move(g), std::move(h)};
}

std::pair<LittlewoodSeq, LittlewoodSeq> deinterleave(const LittlewoodSeq& f) {
    if (f.empty()) throw std::invalid_argument("deinterleave: len f must be >= 1");
    LittlewoodSeq g, h;
    for (std::size_t j = 0; j < f.size(); ++j) (j % 2 == 0 ? g : h).signs.push_back(f.signs[j]);
    return {std::move(g), std::move(h)};
}

LaurentPoly crosscorrelation(const CoeffSeq& f, const CoeffSeq& g) {
    if (f.empty() || g.empty()) return {};
    LaurentPoly r;
    long long lf = static_cast<long long>(f.size()), lg = static_cast<long long>(g.size());
    r.low = -(lg - 1);
    r.coeffs.assign(static_cast<std::size_t>(lf + lg - 1), Complex{});
    for (long long s = r.low; s <= lf - 1; ++s) {
        Complex acc{};
        long long jlo = std::max(0LL, -s), jhi = std::min(lg - 1, lf - 1 - s);
        for (long long j = jlo; j <= jhi; ++j)
            acc += f[static_cast<std::size_t>(j + s)] * std::conj(g[static_cast<std::size_t>(j)]);
        r.coeffs[static_cast<std::size_t>(s - r.low)] = acc;
    }
    r.trim();
    return r;
}

IntLaurent crosscorrelation(const LittlewoodSeq& f, const LittlewoodSeq& g) {
    if (f.empty() || g.empty()) return {};
    IntLaurent r;
    long long lf = static_cast<long long>(f.size()), lg = static_cast<long long>(g.size());
    r.low = -(lg - 1);
    r.coeffs.assign(static_cast<std::size_t>(lf + lg - 1), 0);
    for (long long s = r.low; s <= lf - 1; ++s) {
        long long acc = 0;
        long long jlo = std::max(0LL, -s), jhi = std::min(lg - 1, lf - 1 - s);
        for (long long j = jlo; j <= jhi; ++j)
            acc += static_cast<long long>(f.signs[static_cast<std::size_t>(j + s)]) *
                   g.signs[static_cast<std::size_t>(j)];
        r.coeffs[static_cast<std::size_t>(s - r.low)] = acc;
    }
    r.trim();
    return r;
}

LaurentPoly autocorrelation(const CoeffSeq& a) { return crosscorrelation(a, a); }
IntLaurent autocorrelation(const LittlewoodSeq& a) { return crosscorrelation(a, a); }

Complex acf_value(const CoeffSeq& a, long long s) {
    long long n = static_cast<long long>(a.size());
    Complex acc{};
    long long jlo = std::max(0LL, -s), jhi = std::min(n - 1, n - 1 - s);
    for (long long j = jlo; j <= jhi; ++j)
        acc += a[static_cast<std::size_t>(j + s)] * std::conj(a[static_cast<std::size_t>(j)]);
    return acc;
}

long long acf_value(const LittlewoodSeq& a, long long s) {
    long long n = static_cast<long long>(a.size());
    long long acc = 0;
    long long jlo = std::max(0LL, -s), jhi = std::min(n - 1, n - 1 - s);
    for (long long j = jlo; j <= jhi; ++j)
        acc += static_cast<long long>(a.signs[static_cast<std::size_t>(j + s)]) *
               a.signs[static_cast<std::size_t>(j)];
    return acc;
}

LaurentPoly poly_product(const CoeffSeq& a, const CoeffSeq& b) {
    if (a.empty() || b.empty()) return {};
    LaurentPoly r;
    r.low = 0;
    r.coeffs.assign(a.size() + b.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r.coeffs[i + j] += a[i] * b[j];
    r.trim();
    return r;
}

IntLaurent poly_product(const LittlewoodSeq& a, const LittlewoodSeq& b) {
    if (a.empty() || b.empty()) return {};
    IntLaurent r;
    r.low = 0;
    r.coeffs.assign(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r.coeffs[i + j] += static_cast<long long>(a.signs[i]) * b.signs[j];
    r.trim();
    return r;
}

double l2sq(const LaurentPoly& p) {
    double acc = 0;
    for (const auto& c : p.coeffs) acc += std::norm(c);
    return acc;
}

long long l2sq(const IntLaurent& p) {
    long long acc = 0;
    for (long long c : p.coeffs) acc += c * c;
    return acc;
}

double l4_4(const CoeffSeq& a) { return l2sq(autocorrelation(a)); }
long long l4_4(const LittlewoodSeq& a) { return l2sq(autocorrelation(a)); }

double adf(const CoeffSeq& a) {
    if (a.empty()) throw std::invalid_argument("adf: zero sequence");
    LaurentPoly ac = autocorrelation(a);
    double c0 = std::norm(ac.at(0));
    return (l2sq(ac) - c0) / c0;
}

Rational adf(const LittlewoodSeq& a) {
    if (a.empty()) throw std::invalid_argument("adf: zero sequence");
    IntLaurent ac = autocorrelation(a);
    long long c0 = ac.at(0);
    return Rational(l2sq(ac) - c0 * c0, c0 * c0);
}

LaurentPoly pair_energy(const CoeffSeq& g, const CoeffSeq& h) {
    return add(autocorrelation(g), autocorrelation(h));
}

IntLaurent pair_energy(const LittlewoodSeq& g, const LittlewoodSeq& h) {
    return add(autocorrelation(g), autocorrelation(h));
}

}  // namespace rsl
