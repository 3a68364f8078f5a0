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

#ifndef RSL_CLI_HPP
#define RSL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rsl::cli {

// Exit codes: 0 success, 1 usage or parse error, 2 precondition
// violation, 3 resource ceiling exceeded.  `table` additionally exits
// with 2 when a regenerated row disagrees with the bundled reference.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kPreconditionError = 2;
inline constexpr int kCeilingError = 3;

/// Runs the command line given as argv-style tokens (program name
/// excluded).  All commands are pure: identical inputs give identical
/// output apart from timing fields.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsl::cli

#endif  // RSL_CLI_HPP
