// Copyright 2026 The psr Authors
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

#ifndef PSR_CLI_H
#define PSR_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace psr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Flags shared by every subcommand.
struct RunConfig {
  std::string subcommand;
  int n = 2;
  std::uint64_t shots = 1000;
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  double confidence = 0.95;
  std::string format = "json";  // json | csv | text
  std::string output;           // empty: standard output

  /// Throws std::invalid_argument when a field is outside its module cap.
  void validate() const;
};

/// Entry point behind the `psr` binary. `args` excludes the program name.
/// Returns kExitOk, kExitRuntime or kExitUsage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psr

#endif  // PSR_CLI_H
