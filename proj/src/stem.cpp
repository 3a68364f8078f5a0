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

#include "rsl/stem.hpp"

#include <stdexcept>

namespace rsl {

namespace {

void check_seed(const CoeffSeq& f) {
    if (f.empty() || f.front() == Complex{})
        throw std::invalid_argument("stem: seed must be nonzero with nonzero constant coefficient");
}

}  // namespace

CoeffSeq rsl_step(const CoeffSeq& f, int sigma) {
    check_seed(f);
    CoeffSeq tail = alternate(conj_reciprocal(f));
    CoeffSeq r = f;
    r.reserve(2 * f.size());
    for (const auto& c : tail) r.push_back(static_cast<double>(sigma) * c);
    return r;
}

LittlewoodSeq rsl_step(const LittlewoodSeq& f, int sigma) {
    if (f.empty()) throw std::invalid_argument("stem: seed must be nonzero");
    LittlewoodSeq tail = alternate(conj_reciprocal(f));
    LittlewoodSeq r = f;
    r.signs.reserve(2 * f.size());
    for (auto v : tail.signs) r.signs.push_back(static_cast<std::int8_t>(sigma * v));
    return r;
}

Stem rsl_stem(const CoeffSeq& seed, const SignSequence& signs, int steps) {
    check_seed(seed);
    if (steps < 0 || static_cast<std::size_t>(steps) > signs.size())
        throw std::invalid_argument("stem: need at least `steps` signs");
    Stem st{seed, signs, {seed}};
    for (int k = 0; k < steps; ++k)
        st.polynomials.push_back(rsl_step(st.polynomials.back(), signs[static_cast<std::size_t>(k)]));
    return st;
}

SignSequence shapiro_signs(int n) {
    if (n < 0) throw std::invalid_argument("shapiro_signs: n must be >= 0");
    SignSequence s;
    s.signs.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        s.signs.push_back(k == 0 ? 1 : static_cast<std::int8_t>((k + 1) % 2 == 0 ? 1 : -1));
    return s;
}

Rational limiting_adf(const LittlewoodSeq& seed) {
    if (seed.empty()) throw std::invalid_argument("limiting_adf: seed must be nonzero");
    long long n = l4_4(seed) + l2sq(poly_product(seed, alternate(seed)));
    long long len = static_cast<long long>(seed.size());
    return Rational(2 * n - 3 * len * len, 3 * len * len);
}

double limiting_adf(const CoeffSeq& seed) {
    check_seed(seed);
    double n = l4_4(seed) + l2sq(poly_product(seed, alternate(seed)));
    double c0 = 0;
    for (const auto& c : seed) c0 += std::norm(c);
    return -1.0 + (2.0 / 3.0) * n / (c0 * c0);
}

Rational limiting_adf_pair(const LittlewoodSeq& g, const LittlewoodSeq& h) {
    if (g.empty() && h.empty())
        throw std::invalid_argument("limiting_adf_pair: pair must interleave to a nonzero seed");
    if (g.size() != h.size() && g.size() != h.size() + 1)
        throw std::invalid_argument("limiting_adf_pair: len g must be len h or len h + 1");
    long long e = l2sq(pair_energy(g, h));
    long long d = static_cast<long long>(g.size() + h.size());
    return Rational(4 * e - 3 * d * d, 3 * d * d);
}

double limiting_adf_pair(const CoeffSeq& g, const CoeffSeq& h) {
    if (g.empty() || g.front() == Complex{})
        throw std::invalid_argument("limiting_adf_pair: g needs a nonzero constant coefficient");
    double e = l2sq(pair_energy(g, h));
    double d = 0;
    for (const auto& c : g) d += std::norm(c);
    for (const auto& c : h) d += std::norm(c);
    return -1.0 + (4.0 / 3.0) * e / (d * d);
}

ConvergenceTrace convergence_trace(const CoeffSeq& seed, const SignSequence& signs,
                                   std::size_t max_len) {
    check_seed(seed);
    ConvergenceTrace tr;
    bool binary = LittlewoodSeq::is_littlewood(seed);
    if (binary) {
        tr.limit_exact = limiting_adf(LittlewoodSeq::from_coeffs(seed));
        tr.limit = tr.limit_exact->to_double();
    } else {
        tr.limit = limiting_adf(seed);
    }

    CoeffSeq f = seed;
    for (int step = 0;; ++step) {
        TracePoint p;
        p.step = step;
        p.length = f.size();
        if (binary) {
            p.adf_exact = adf(LittlewoodSeq::from_coeffs(f));
            p.adf_value = p.adf_exact->to_double();
        } else {
            p.adf_value = adf(f);
        }
        tr.points.push_back(std::move(p));
        if (2 * f.size() > max_len || static_cast<std::size_t>(step) >= signs.size()) break;
        f = rsl_step(f, signs[static_cast<std::size_t>(step)]);
    }
    return tr;
}

}  // namespace rsl
