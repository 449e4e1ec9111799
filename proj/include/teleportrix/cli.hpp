// Copyright 2026 The Teleportrix Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace teleportrix::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalid = 2 };

/// "start:stop:step". The stop value is included when it lies within half a
/// step of the last grid point. Throws ParseError.
std::vector<double> expand_grid(std::string_view spec);

/// Seed from TELEPORTRIX_SEED, if set. Throws ParseError when it is not an
/// unsigned 64-bit decimal.
std::optional<std::uint64_t> seed_from_environment();

/// Entry point shared by the executable and the tests. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; argv[0] is supplied.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teleportrix::cli
