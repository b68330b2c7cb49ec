// Copyright 2026 The NAMF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NAMF_CLI_HPP_
#define NAMF_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace namf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `namf` tool. Subcommands: inject, denoise, metrics,
/// sweep. Returns kExitUsage for bad flags, invalid values and missing input
/// files; kExitFailure for other runtime errors.
int CliMain(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace namf

#endif  // NAMF_CLI_HPP_
