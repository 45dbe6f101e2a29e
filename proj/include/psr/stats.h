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

#ifndef PSR_STATS_H
#define PSR_STATS_H

#include <cstdint>
#include <span>

namespace psr {

struct MeanStat {
  std::uint64_t count = 0;
  double mean = 0.0;
  /// Unbiased sample standard deviation.
  double stddev = 0.0;
  double standard_error = 0.0;
};

MeanStat mean_stat(std::span<const double> xs);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_statistic(std::span<const double> a, std::span<const double> b);

/// Asymptotic rejection threshold sqrt(-ln(alpha/2)/2) * sqrt((n+m)/(n m)).
double ks_critical_value(double alpha, std::uint64_t n, std::uint64_t m);

}  // namespace psr

#endif  // PSR_STATS_H
