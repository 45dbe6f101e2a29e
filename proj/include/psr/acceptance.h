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

#ifndef PSR_ACCEPTANCE_H
#define PSR_ACCEPTANCE_H

#include <span>
#include <string>
#include <vector>

#include "psr/io.h"
#include "psr/seed.h"

/// The end-to-end acceptance checks, shared by the acceptance test binary
/// (full scale) and `psr selftest` (reduced sample sizes).
namespace psr {

struct CheckResult {
  int id = 0;
  std::string name;
  /// The formula or result the check exercises.
  std::string anchor;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  bool reduced = false;
  /// Builds subset-phase states with 1/K instead of 1/sqrt(K) amplitudes, to
  /// confirm that the checks catch it.
  bool inject_normalization_fault = false;
  Seed seed;
};

inline constexpr int kNumCriteria = 12;

CheckResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs every criterion in order, or only `ids` when non-empty.
std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options,
                                        std::span<const int> ids = {});

/// "PASS [ 1] name (anchor): detail".
std::string format_check(const CheckResult& c);

/// Without timing, so that the record is reproducible.
Json to_json(const CheckResult& c);

}  // namespace psr

#endif  // PSR_ACCEPTANCE_H
