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

#ifndef RSL_TABLE_DATA_HPP
#define RSL_TABLE_DATA_HPP

#include <array>
#include <cstddef>
#include <utility>

namespace rsl {

/// Published minimum limiting demerit factors for Littlewood seeds of
/// lengths 1..52, as reduced fractions (numerator, denominator).
inline constexpr std::array<std::pair<long long, long long>, 52> kKnownSeedMinima = {{
    {1, 3},      {1, 3},      {17, 27},    {1, 3},      {41, 75},    {17, 27},
    {73, 147},   {1, 3},      {113, 243},  {41, 75},    {161, 363},  {11, 27},
    {217, 507},  {73, 147},   {281, 675},  {1, 3},      {353, 867},  {113, 243},
    {433, 1083}, {1, 3},      {521, 1323}, {161, 363},  {617, 1587}, {19, 54},
    {721, 1875}, {217, 507},  {833, 2187}, {53, 147},   {953, 2523}, {281, 675},
    {1081, 2883},{1, 3},      {1217, 3267},{353, 867},  {1361, 3675},{29, 81},
    {1513, 4107},{433, 1083}, {1673, 4563},{1, 3},      {1841, 5043},{521, 1323},
    {2017, 5547},{125, 363},  {2201, 6075},{617, 1587}, {2393, 6627},{73, 216},
    {2593, 7203},{721, 1875}, {2801, 7803},{1, 3},
}};

}  // namespace rsl

#endif  // RSL_TABLE_DATA_HPP
