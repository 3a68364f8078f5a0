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

#include <doctest.h>

#include <cstdio>
#include <set>

using namespace rsl;

namespace {

LittlewoodSeq lw(const char* text) { return LittlewoodSeq::parse(text); }

}  // namespace

TEST_CASE("pack and unpack round trip") {
    for (std::size_t len = 1; len <= 10; ++len)
        for (PackedSeed x = 0; x < (1u << len); ++x)
            CHECK(pack_seed(unpack_seed(x, len)) == x);
}

TEST_CASE("canonical_rep") {
    CHECK(canonical_rep(lw("-")) == lw("+"));
    CHECK(canonical_rep(lw("--")) == lw("++"));
    CHECK(canonical_rep(lw("-+")) == lw("++"));  // alternation fixes the sign flip

    for (std::size_t len = 1; len <= 10; ++len) {
        for (PackedSeed x = 0; x < (1u << len); ++x) {
            LittlewoodSeq s = unpack_seed(x, len);
            LittlewoodSeq c = canonical_rep(s);
            CHECK(canonical_rep(c) == c);  // idempotent
            // invariant across the whole orbit, and the limit is preserved
            LittlewoodSeq neg = s, alt = s, rev = s;
            for (auto& v : neg.signs) v = -v;
            for (std::size_t j = 1; j < alt.signs.size(); j += 2) alt.signs[j] = -alt.signs[j];
            std::reverse(rev.signs.begin(), rev.signs.end());
            for (const LittlewoodSeq* t : {&neg, &alt, &rev}) {
                CHECK(canonical_rep(*t) == c);
                CHECK(limiting_adf(*t) == limiting_adf(s));
            }
        }
    }
}

TEST_CASE("search_optimal_seeds known minima") {
    SearchReport r3 = search_optimal_seeds(3);
    CHECK(r3.minimum_limit == Rational(17, 27));
    SearchReport r9 = search_optimal_seeds(9);
    CHECK(r9.minimum_limit == Rational(113, 243));
    SearchReport r8 = search_optimal_seeds(8);
    CHECK(r8.minimum_limit == Rational(1, 3));
    CHECK(!r8.witnesses.empty());
    for (const auto& w : r8.witnesses) {
        CHECK(limiting_adf(w) == Rational(1, 3));
        auto [g, h] = deinterleave(w.to_coeffs());
        CHECK(is_golay(LittlewoodSeq::from_coeffs(g), LittlewoodSeq::from_coeffs(h)));
    }
}

TEST_CASE("witnesses attain the reported minimum and are canonical") {
    for (std::size_t len : {5u, 7u, 10u}) {
        SearchReport r = search_optimal_seeds(len);
        CHECK(!r.witnesses.empty());
        std::set<PackedSeed> seen;
        for (const auto& w : r.witnesses) {
            CHECK(w.size() == len);
            CHECK(limiting_adf(w) == r.minimum_limit);
            CHECK(canonical_rep(w) == w);
            CHECK(seen.insert(pack_seed(w)).second);  // no duplicates
        }
    }
}

TEST_CASE("symmetry reduction does not change the report") {
    for (std::size_t len : {4u, 6u, 9u, 11u}) {
        SearchOptions with, without;
        without.use_symmetry = false;
        SearchReport a = search_optimal_seeds(len, with);
        SearchReport b = search_optimal_seeds(len, without);
        CHECK(a.minimum_limit == b.minimum_limit);
        REQUIRE(a.witnesses.size() == b.witnesses.size());
        for (std::size_t i = 0; i < a.witnesses.size(); ++i)
            CHECK(a.witnesses[i] == b.witnesses[i]);
        CHECK(b.seeds_evaluated >= a.seeds_evaluated);
    }
}

TEST_CASE("worker count never changes the result") {
    for (unsigned workers : {1u, 2u, 4u, 7u}) {
        SearchOptions o;
        o.workers = workers;
        SearchReport r = search_optimal_seeds(13, o);
        CHECK(r.minimum_limit == Rational(217, 507));
        SearchReport base = search_optimal_seeds(13);
        REQUIRE(r.witnesses.size() == base.witnesses.size());
        for (std::size_t i = 0; i < r.witnesses.size(); ++i)
            CHECK(r.witnesses[i] == base.witnesses[i]);
    }
}

TEST_CASE("length ceiling") {
    CHECK_THROWS_AS(search_optimal_seeds(kDefaultSeedCeiling + 1), std::length_error);
    SearchOptions ext;
    ext.extended = true;
    CHECK_THROWS_AS(search_optimal_seeds(kExtendedSeedCeiling + 1, ext), std::length_error);
    CHECK_THROWS_AS(search_golay_pairs(kDefaultGolayCeiling + 1), std::length_error);
}

TEST_CASE("search_golay_pairs") {
    GolaySearchResult r2 = search_golay_pairs(2);
    CHECK(r2.exists);
    bool found = false;
    for (const auto& [g, h] : r2.pairs) {
        CHECK(is_golay(g, h));
        CHECK(g.signs.front() == 1);
        CHECK(h.signs.front() == 1);
        if (g == lw("++") && h == lw("+-")) found = true;
    }
    CHECK(found);

    CHECK_FALSE(search_golay_pairs(3).exists);
    CHECK(search_golay_pairs(3).pairs.empty());
    CHECK_FALSE(search_golay_pairs(5).exists);
    CHECK_FALSE(search_golay_pairs(7).exists);
    CHECK_FALSE(search_golay_pairs(9).exists);

    GolaySearchResult r10 = search_golay_pairs(10);
    CHECK(r10.exists);
    for (const auto& [g, h] : r10.pairs) CHECK(is_golay(g, h));

    GolaySearchResult first = search_golay_pairs(10, /*first_only=*/true);
    CHECK(first.exists);
    CHECK(first.pairs.size() == 1);

    // unordered pairs are reported once
    GolaySearchResult r4 = search_golay_pairs(4);
    std::set<std::pair<PackedSeed, PackedSeed>> keys;
    for (const auto& [g, h] : r4.pairs) {
        PackedSeed a = pack_seed(g), b = pack_seed(h);
        CHECK(keys.insert(std::minmax(a, b)).second);
    }
}

TEST_CASE("minimum 1/3 is equivalent to a Golay deinterleaving") {
    for (std::size_t len = 1; len <= 12; ++len) {
        SearchReport r = search_optimal_seeds(len);
        bool any_golay = false;
        for (const auto& w : r.witnesses) {
            auto [g, h] = deinterleave(w);
            PairVerdict v = classify(g, h).verdict;
            bool golay = v == PairVerdict::Golay || v == PairVerdict::TrivialGolay;
            any_golay = any_golay || golay;
            // at the bound, non-Golay witnesses are exactly the
            // near-complementary interleavings
            if (r.minimum_limit == thomas_bound(len).bound && !golay)
                CHECK((v == PairVerdict::NearComplementaryOdd ||
                       v == PairVerdict::NearComplementaryUneven ||
                       v == PairVerdict::NearComplementaryEven));
        }
        CHECK((r.minimum_limit == Rational(1, 3)) == any_golay);
    }
}

TEST_CASE("checkpointed runs reproduce the plain report") {
    std::string path = "checkpoint-test.txt";
    std::remove(path.c_str());
    SearchOptions with_ckpt;
    with_ckpt.checkpoint_path = path;
    SearchReport a = search_optimal_seeds(13, with_ckpt);
    SearchReport plain = search_optimal_seeds(13);
    CHECK(a.minimum_limit == plain.minimum_limit);
    REQUIRE(a.witnesses.size() == plain.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i)
        CHECK(a.witnesses[i] == plain.witnesses[i]);

    // a second run resumes from the completed checkpoint and still
    // reports identical results
    SearchReport b = search_optimal_seeds(13, with_ckpt);
    CHECK(b.minimum_limit == plain.minimum_limit);
    REQUIRE(b.witnesses.size() == plain.witnesses.size());
    for (std::size_t i = 0; i < b.witnesses.size(); ++i)
        CHECK(b.witnesses[i] == plain.witnesses[i]);
    std::remove(path.c_str());
}

TEST_CASE("reproduce_table matches direct searches") {
    auto rows = reproduce_table(8);
    REQUIRE(rows.size() == 8);
    for (std::size_t len = 1; len <= 8; ++len) {
        const TableRow& row = rows[len - 1];
        CHECK(row.length == len);
        SearchReport r = search_optimal_seeds(len);
        CHECK(row.minimum_limit == r.minimum_limit);
        CHECK(row.witness_count == r.witnesses.size());
        CHECK(row.first_witness == r.witnesses.front());
    }
}
