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

#include "rsl/search.hpp"

#include "rsl/golay.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rsl {

namespace {

constexpr std::size_t kHardSeedCap = 30;  // packed representation limit

std::uint32_t reverse_bits(std::uint32_t x, std::size_t len) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < len; ++i) {
        r = (r << 1) | (x & 1u);
        x >>= 1;
    }
    return r;
}

std::uint32_t odd_mask(std::size_t len) {
    std::uint32_t m = 0;
    for (std::size_t j = 1; j < len; j += 2) m |= (1u << j);
    return m;
}

std::uint32_t full_mask(std::size_t len) {
    return len >= 32 ? 0xffffffffu : ((1u << len) - 1u);
}

// Orbit under {negate}^n {alternate}^a {reverse}^r; the canonical member
// minimizes the coefficient-0-first lexicographic key (+ before -), which
// is the bit-reversed packed value.
PackedSeed canonical_packed(PackedSeed x, std::size_t len, std::uint32_t omask,
                            std::uint32_t fmask) {
    PackedSeed best = x;
    std::uint32_t best_key = reverse_bits(x, len);
    for (int r = 0; r < 2; ++r) {
        PackedSeed t0 = r ? reverse_bits(x, len) : x;
        for (int a = 0; a < 2; ++a) {
            PackedSeed t1 = a ? (t0 ^ omask) : t0;
            for (int n = 0; n < 2; ++n) {
                PackedSeed t = n ? (t1 ^ fmask) : t1;
                std::uint32_t key = reverse_bits(t, len);
                if (key < best_key) { best_key = key; best = t; }
            }
        }
    }
    return best;
}

// Numerator of the closed-form limit: l4_4(f) + l2sq(f * f(-z)), all in
// plain integers.  The limit itself is (2N - 3 L^2) / (3 L^2).
long long limit_numerator(const std::int8_t* f, std::size_t len) {
    long long l = static_cast<long long>(len);
    long long n = l * l;  // |C(0)|^2
    for (long long s = 1; s < l; ++s) {
        long long c = 0;
        for (long long j = 0; j < l - s; ++j)
            c += static_cast<long long>(f[j + s]) * f[j];
        n += 2 * c * c;
    }
    for (long long k = 0; k <= 2 * l - 2; ++k) {
        long long p = 0;
        long long jlo = std::max(0LL, k - l + 1), jhi = std::min(k, l - 1);
        for (long long j = jlo; j <= jhi; ++j) {
            long long term = static_cast<long long>(f[j]) * f[k - j];
            p += ((k - j) % 2 == 0) ? term : -term;
        }
        n += p * p;
    }
    return n;
}

void unpack_into(PackedSeed x, std::size_t len, std::int8_t* out) {
    for (std::size_t j = 0; j < len; ++j)
        out[j] = (x >> j) & 1u ? static_cast<std::int8_t>(-1) : static_cast<std::int8_t>(1);
}

struct Partial {
    bool done = false;
    long long min_n = -1;
    std::uint64_t evaluated = 0;
    std::uint64_t orbits = 0;
    std::vector<PackedSeed> witnesses;  // canonical packed forms
};

struct Checkpoint {
    std::string path;
    std::mutex mu;

    void load(std::size_t length, bool sym, std::size_t nblocks, std::vector<Partial>& parts) {
        std::ifstream in(path);
        if (!in) return;
        std::string tag;
        std::size_t len = 0, blocks = 0;
        int s = 0;
        in >> tag >> len >> s >> blocks;
        if (tag != "rsl-checkpoint-v1" || len != length || s != (sym ? 1 : 0) || blocks != nblocks)
            return;  // stale checkpoint for different parameters; ignore
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string kw;
            std::size_t id = 0;
            Partial p;
            std::size_t nw = 0;
            if (!(ls >> kw >> id >> p.min_n >> p.evaluated >> p.orbits >> nw) || kw != "block")
                continue;
            p.witnesses.resize(nw);
            for (auto& w : p.witnesses)
                if (!(ls >> w)) break;
            if (id < parts.size()) { p.done = true; parts[id] = std::move(p); }
        }
    }

    void record(std::size_t id, const Partial& p) {
        std::lock_guard<std::mutex> lock(mu);
        std::ofstream out(path, std::ios::app);
        out << "block " << id << ' ' << p.min_n << ' ' << p.evaluated << ' ' << p.orbits << ' '
            << p.witnesses.size();
        for (auto w : p.witnesses) out << ' ' << w;
        out << '\n';
    }

    void start(std::size_t length, bool sym, std::size_t nblocks) {
        std::lock_guard<std::mutex> lock(mu);
        std::ifstream probe(path);
        if (probe.good()) return;  // keep an existing resumable file
        std::ofstream out(path);
        out << "rsl-checkpoint-v1 " << length << ' ' << (sym ? 1 : 0) << ' ' << nblocks << '\n';
    }
};

}  // namespace

PackedSeed pack_seed(const LittlewoodSeq& s) {
    if (s.size() > kHardSeedCap) throw std::invalid_argument("pack_seed: sequence too long");
    PackedSeed x = 0;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (s.signs[j] < 0) x |= (1u << j);
    return x;
}

LittlewoodSeq unpack_seed(PackedSeed x, std::size_t length) {
    LittlewoodSeq s;
    s.signs.resize(length);
    unpack_into(x, length, s.signs.data());
    return s;
}

LittlewoodSeq canonical_rep(const LittlewoodSeq& seed) {
    if (seed.empty()) throw std::invalid_argument("canonical_rep: length must be >= 1");
    std::size_t len = seed.size();
    PackedSeed c = canonical_packed(pack_seed(seed), len, odd_mask(len), full_mask(len));
    return unpack_seed(c, len);
}

SearchReport search_optimal_seeds(std::size_t length, const SearchOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t ceiling = opts.ceiling_override ? opts.ceiling_override : kDefaultSeedCeiling;
    if (opts.extended) ceiling = std::max(ceiling, kExtendedSeedCeiling);
    ceiling = std::min(ceiling, kHardSeedCap);
    if (length < 1) throw std::invalid_argument("search_optimal_seeds: length must be >= 1");
    if (length > ceiling)
        throw std::length_error("search_optimal_seeds: length exceeds ceiling (use extended mode)");

    const std::size_t len = length;
    const std::uint32_t omask = odd_mask(len), fmask = full_mask(len);
    const std::uint64_t total = 1ull << len;
    const std::size_t block_bits = len > 12 ? 8 : 0;
    const std::size_t nblocks = 1ull << block_bits;
    const std::uint64_t per_block = total >> block_bits;

    std::vector<Partial> parts(nblocks);
    Checkpoint ckpt;
    if (!opts.checkpoint_path.empty()) {
        ckpt.path = opts.checkpoint_path;
        ckpt.load(len, opts.use_symmetry, nblocks, parts);
        ckpt.start(len, opts.use_symmetry, nblocks);
    }

    unsigned workers = opts.workers ? opts.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, nblocks));

    std::atomic<std::size_t> next_block{0};
    auto run_block = [&](std::size_t b) {
        Partial p;
        std::int8_t f[kHardSeedCap];
        const std::uint64_t begin = b * per_block, end = begin + per_block;
        for (std::uint64_t x = begin; x < end; ++x) {
            PackedSeed xs = static_cast<PackedSeed>(x);
            PackedSeed canon = canonical_packed(xs, len, omask, fmask);
            if (opts.use_symmetry) {
                if (canon != xs) continue;
                ++p.orbits;
            } else if (canon == xs) {
                ++p.orbits;
            }
            unpack_into(xs, len, f);
            long long n = limit_numerator(f, len);
            ++p.evaluated;
            if (p.min_n < 0 || n < p.min_n) {
                p.min_n = n;
                p.witnesses.assign(1, canon);
            } else if (n == p.min_n) {
                p.witnesses.push_back(canon);
            }
        }
        if (!ckpt.path.empty()) ckpt.record(b, p);
        p.done = true;
        parts[b] = std::move(p);
    };

    auto worker_loop = [&] {
        for (;;) {
            std::size_t b = next_block.fetch_add(1);
            if (b >= nblocks) return;
            if (parts[b].done) continue;  // restored from checkpoint
            run_block(b);
        }
    };

    if (workers <= 1) {
        worker_loop();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_loop);
        for (auto& t : pool) t.join();
    }

    // merge in block order: exact minimum, lexicographically sorted
    // deduplicated canonical witnesses
    SearchReport rep;
    rep.length = len;
    long long min_n = -1;
    std::vector<PackedSeed> packed;
    for (const auto& p : parts) {
        rep.seeds_evaluated += p.evaluated;
        rep.orbit_count += p.orbits;
        if (p.min_n < 0) continue;
        if (min_n < 0 || p.min_n < min_n) {
            min_n = p.min_n;
            packed = p.witnesses;
        } else if (p.min_n == min_n) {
            packed.insert(packed.end(), p.witnesses.begin(), p.witnesses.end());
        }
    }
    std::sort(packed.begin(), packed.end(), [&](PackedSeed a, PackedSeed b) {
        return reverse_bits(a, len) < reverse_bits(b, len);
    });
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

    long long l = static_cast<long long>(len);
    rep.minimum_limit = Rational(2 * min_n - 3 * l * l, 3 * l * l);

    rep.witnesses.reserve(packed.size());
    for (PackedSeed w : packed) {
        LittlewoodSeq seq = unpack_seed(w, len);
        // certificate: recompute through both closed forms
        if (limiting_adf(seq) != rep.minimum_limit)
            throw std::logic_error("search: witness fails direct re-verification");
        auto [g, h] = deinterleave(seq);
        if (limiting_adf_pair(g, h) != rep.minimum_limit)
            throw std::logic_error("search: witness fails pair-route re-verification");
        rep.witnesses.push_back(std::move(seq));
    }

    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

GolaySearchResult search_golay_pairs(std::size_t length, bool first_only, std::size_t ceiling) {
    if (length < 1) throw std::invalid_argument("search_golay_pairs: length must be >= 1");
    if (length > ceiling)
        throw std::length_error("search_golay_pairs: length exceeds ceiling");

    GolaySearchResult res;
    res.length = length;
    const std::size_t m = length;
    const std::uint64_t half = 1ull << (m - 1);
    res.pairs_scanned = half * half;

    // bucket every first-coefficient-normalized member by its off-peak
    // autocorrelation; complementary partners live in the negated bucket
    std::map<std::vector<long long>, std::vector<PackedSeed>> by_tail;
    for (std::uint64_t x = 0; x < half; ++x) {
        PackedSeed g = static_cast<PackedSeed>(x << 1);  // bit 0 clear: leading +1
        LittlewoodSeq seq = unpack_seed(g, m);
        std::vector<long long> tail(m - 1);
        for (std::size_t s = 1; s < m; ++s) tail[s - 1] = acf_value(seq, static_cast<long long>(s));
        by_tail[tail].push_back(g);
    }

    for (std::uint64_t x = 0; x < half && !(first_only && res.exists); ++x) {
        PackedSeed hb = static_cast<PackedSeed>(x << 1);
        LittlewoodSeq hs = unpack_seed(hb, m);
        std::vector<long long> want(m - 1);
        for (std::size_t s = 1; s < m; ++s) want[s - 1] = -acf_value(hs, static_cast<long long>(s));
        auto it = by_tail.find(want);
        if (it == by_tail.end()) continue;
        for (PackedSeed gb : it->second) {
            if (gb > hb) continue;  // report each unordered pair once
            LittlewoodSeq gs = unpack_seed(gb, m);
            if (!is_golay(gs, hs)) throw std::logic_error("search_golay_pairs: bucket mismatch");
            res.exists = true;
            res.pairs.emplace_back(std::move(gs), hs);
            if (first_only) break;
        }
    }
    return res;
}

std::vector<TableRow> reproduce_table(std::size_t max_length, const SearchOptions& opts) {
    std::vector<TableRow> rows;
    for (std::size_t l = 1; l <= max_length; ++l) {
        SearchReport rep = search_optimal_seeds(l, opts);
        TableRow row;
        row.length = l;
        row.minimum_limit = rep.minimum_limit;
        row.witness_count = rep.witnesses.size();
        row.first_witness = rep.witnesses.front();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace rsl
