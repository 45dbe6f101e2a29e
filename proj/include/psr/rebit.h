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

#ifndef PSR_REBIT_H
#define PSR_REBIT_H

#include <cstdint>
#include <optional>

#include "psr/protocols.h"
#include "psr/qcore.h"
#include "psr/seed.h"

namespace psr {

/// Real-amplitude state of n data rebits and one flag rebit. The flag is the
/// last rebit: index 2k is |k>|R>, index 2k+1 is |k>|I>.
class RebitState {
 public:
  /// Throws std::invalid_argument unless the length is 2^{n+1} within the
  /// state cap and the norm is 1 within kStructuralTol.
  static RebitState from_amplitudes(Eigen::VectorXd amps);

  int num_qubits() const { return n_; }
  const Eigen::VectorXd& amplitudes() const { return amps_; }
  /// The same vector as an (n+1)-qubit state.
  QuantumState as_state() const;

 private:
  RebitState(int n, Eigen::VectorXd amps) : n_(n), amps_(std::move(amps)) {}
  int n_;
  Eigen::VectorXd amps_;
};

/// a_k + i b_k  ->  a_k |k>|R> + b_k |k>|I>.
RebitState encode_rebit(const QuantumState& psi);

struct DecodeResult {
  QuantumState state;
  std::uint64_t attempts = 0;
};

/// sqrt(2) (I (x) <f|) psi_R with |f> = (|R> - i|I>)/sqrt(2); per-attempt
/// success probability ||(I (x) <f|) psi_R||^2 = 1/2. Each failed attempt
/// consumes the copy and the next attempt starts from a fresh one. The global
/// phase is fixed so the largest-magnitude amplitude is real and positive.
/// With `max_attempts` set, throws std::runtime_error once it is exhausted.
DecodeResult decode_rebit(const RebitState& psi_r, Rng& rng,
                          std::optional<std::uint64_t> max_attempts = std::nullopt);
DecodeResult decode_rebit(const RebitState& psi_r, const Seed& seed,
                          std::optional<std::uint64_t> max_attempts = std::nullopt);

/// Per-attempt postselection probability of decode_rebit.
double decode_success_probability(const RebitState& psi_r);

/// Reduced state of the flag rebit.
DensityMatrix flag_state(const RebitState& psi_r);

/// 2 (1 - tr(rho_flag^2)).
double rebit_flag_imaginarity(const RebitState& psi_r);

/// SWAP test on two copies of the flag rebit: estimate 2(1 - (2f - 1)) from the
/// accept fraction f, range 4, O(1) copies per shot.
EstimateReport estimate_flag_imaginarity(const RebitState& psi_r, const ShotBudget& budget,
                                         const Seed& seed);

}  // namespace psr

#endif  // PSR_REBIT_H
