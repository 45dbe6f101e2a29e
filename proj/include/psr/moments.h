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

#ifndef PSR_MOMENTS_H
#define PSR_MOMENTS_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "psr/qcore.h"
#include "psr/seed.h"

namespace psr {

/// Largest d^t for which moment operators are built densely.
inline constexpr std::uint64_t kMaxMomentDim = 4096;
inline constexpr int kMaxMomentCopies = 3;
/// Subset-phase ensembles up to this many (S, f) configurations are averaged
/// exactly; larger ones are sampled.
inline constexpr std::uint64_t kMaxEnumeratedConfigs = std::uint64_t{1} << 20;

/// t-copy average E[|psi><psi|^{(x)t}] over an ensemble.
struct MomentOperator {
  int n = 0;
  int t = 0;
  Matrix mat;

  /// Hermitian, PSD and unit trace within kIdentityTol; throws std::logic_error.
  void validate() const;
};

/// sum over S_t of the permutation operators on t copies of C^d, divided by t!.
Matrix symmetric_projector(int n, int t);

/// Pi_sym / binom(d + t - 1, t). Throws std::invalid_argument beyond the caps.
MomentOperator haar_moment(int n, int t);

/// Uniform average of |psi><psi|^{(x)t}; all states must share n.
MomentOperator ensemble_moment(std::span<const QuantumState> states, int t);

struct SubsetPhaseMoment {
  MomentOperator moment;
  bool exact = true;
  std::uint64_t configurations = 0;
  /// Frobenius-norm standard error of the sampled average; 0 when exact.
  double standard_error = 0.0;
};

/// Average over uniform size-K subsets S and uniform sign functions f. Exact
/// when C(2^n, K) * 2^K <= kMaxEnumeratedConfigs, otherwise `samples` draws
/// from sample_subset_phase under `seed`.
SubsetPhaseMoment subset_phase_moment(int n, std::size_t K, int t, const Seed& seed = {},
                                      std::uint64_t samples = 20000);

/// C(2^n, K) * 2^K, saturating at UINT64_MAX.
std::uint64_t subset_phase_configurations(int n, std::size_t K);

/// (1/2) ||A - B||_1. Throws std::invalid_argument on a shape mismatch.
double trace_distance(const Matrix& a, const Matrix& b);
double trace_distance(const MomentOperator& a, const MomentOperator& b);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// 1/2 + td. Throws std::domain_error unless 0 <= td <= 1/2.
double helstrom_probability(double td);

/// min(1, 1/2 + td) for ceilings where td may exceed 1/2.
double helstrom_ceiling(double td);

/// Closed-form Haar averages by name: state_imaginarity, unitary_imaginarity,
/// hs_coherence, coherence_power_4th, rel_entropy_coherence.
double haar_analytics(const std::string& name, std::uint64_t d);
const std::vector<std::string>& haar_analytics_names();

struct MomentBoundRow {
  int n = 0;
  int t = 0;
  std::size_t K = 0;
  double td = 0.0;
  /// td * K / t^2.
  double c = 0.0;
  bool exact = true;
  double standard_error = 0.0;
};

/// TD(subset-phase moment, Haar moment) over the (t, K) grid.
std::vector<MomentBoundRow> moment_bound_table(int n, std::span<const int> ts,
                                               std::span<const std::size_t> Ks,
                                               const Seed& seed = {});

}  // namespace psr

#endif  // PSR_MOMENTS_H
