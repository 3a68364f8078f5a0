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

#ifndef RSL_SEARCH_HPP
#define RSL_SEARCH_HPP

#include "rsl/stem.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rsl {

// Exhaustive search over Littlewood seeds.  Seeds of length L are
// enumerated as integers 0..2^L-1 with bit j giving coefficient j
// (0 -> +1, 1 -> -1).  The symmetry group is generated by global
// negation, alternation, and reversal; each generator preserves the
// limiting demerit factor, and the search result must be identical with
// the reduction on or off.

inline constexpr std::size_t kDefaultSeedCeiling = 24;
inline constexpr std::size_t kExtendedSeedCeiling = 28;
inline constexpr std::size_t kDefaultGolayCeiling = 13;

using PackedSeed = std::uint32_t;

PackedSeed pack_seed(const LittlewoodSeq& s);
LittlewoodSeq unpack_seed(PackedSeed x, std::size_t length);

/// Lexicographically smallest orbit member under the symmetry group,
/// with + ordered before -.  Idempotent and orbit-invariant.
LittlewoodSeq canonical_rep(const LittlewoodSeq& seed);

struct SearchReport {
    std::size_t length = 0;
    Rational minimum_limit;
    std::vector<LittlewoodSeq> witnesses;  // canonical representatives, sorted
    std::uint64_t orbit_count = 0;
    std::uint64_t seeds_evaluated = 0;
    double wall_time = 0.0;
};

struct SearchOptions {
    bool use_symmetry = true;
    unsigned workers = 0;          // 0 -> hardware concurrency
    bool extended = false;         // raises the length ceiling
    std::size_t ceiling_override = 0;  // nonzero replaces the default ceiling
    std::string checkpoint_path;   // extended mode: resumable prefix ranges
};

/// Minimum limiting demerit factor over all Littlewood seeds of the given
/// length, with every canonical witness attaining it.  Deterministic:
/// worker count and scheduling never change the report (wall_time aside).
SearchReport search_optimal_seeds(std::size_t length, const SearchOptions& opts = {});

struct GolaySearchResult {
    std::size_t length = 0;
    bool exists = false;
    /// Pairs with the leading coefficient of each member fixed to +1; the
    /// full solution set is the closure under the omitted sign symmetries.
    std::vector<std::pair<LittlewoodSeq, LittlewoodSeq>> pairs;
    std::uint64_t pairs_scanned = 0;
};

/// Exhaustive existence search for binary Golay pairs of equal length.
/// An empty pair list is a definitive nonexistence verdict.
GolaySearchResult search_golay_pairs(std::size_t length, bool first_only = false,
                                     std::size_t ceiling = kDefaultGolayCeiling);

struct TableRow {
    std::size_t length = 0;
    Rational minimum_limit;
    std::size_t witness_count = 0;
    LittlewoodSeq first_witness;
};

/// Runs search_optimal_seeds for every length 1..max_length.
std::vector<TableRow> reproduce_table(std::size_t max_length, const SearchOptions& opts = {});

}  // namespace rsl

#endif  // RSL_SEARCH_HPP
