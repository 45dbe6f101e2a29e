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

#ifndef PSR_PROTOCOLS_H
#define PSR_PROTOCOLS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psr/qcore.h"
#include "psr/seed.h"

/// Shot-based measurement protocols.
///
/// Each protocol has two layers. The `*_probability` functions run the
/// protocol's circuit on the simulator and return the exact outcome
/// probability; they never call the closed forms in measures.h, which is what
/// lets the tests compare the two. The estimators then draw shots from that
/// probability and attach a Hoeffding half-width.
namespace psr {

struct ShotBudget {
  std::uint64_t shots = 1000;
  double confidence = 0.95;

  /// Throws std::invalid_argument unless shots >= 1 and confidence in (0, 1).
  void validate() const;
};

struct EstimateReport {
  std::string protocol;
  int n = 0;
  double estimate = 0.0;
  std::optional<double> exact;
  /// Exact per-shot outcome probability, where the protocol has one.
  std::optional<double> probability;
  std::uint64_t shots = 0;
  std::uint64_t successes = 0;
  /// Copies of the state (or queries of the unitary) consumed.
  std::uint64_t copies = 0;
  /// Outcome range of the per-shot estimator.
  double range = 1.0;
  double half_width = 0.0;
  double confidence = 0.95;
  /// Unbiased sample variance of the per-shot estimator values.
  double sample_variance = 0.0;
  Seed seed;
};

/// ceil(range^2 / (2 delta^2) * ln(2 / nu)).
std::uint64_t hoeffding_budget(double delta, double nu, double range);

/// range * sqrt(ln(2 / (1 - confidence)) / (2 shots)).
double hoeffding_half_width(double range, std::uint64_t shots, double confidence);

/// Ancilla, H, controlled-SWAP of the two registers, H, measure the ancilla:
/// returns Pr[ancilla = 0] = (1 + tr(rho sigma)) / 2.
double swap_test_probability(const DensityMatrix& rho, const DensityMatrix& sigma);

/// The same circuit on one 2m-qubit state, swapping its two m-qubit halves:
/// (1 + tr(SWAP chi)) / 2.
double swap_test_probability(const DensityMatrix& joint);

/// Pr[accept] of the projector (x)_j (|00><00| + |11><11|) on psi (x) psi,
/// pairing qubit j of the first copy with qubit j of the second.
double hs_coherence_probability(const QuantumState& psi);

/// |<Phi| (U (x) U) |Phi>|^2 on 2n qubits. n <= 3.
double unitary_phi_probability_circuit(const UnitaryMatrix& u);

/// |<Phi| psi (x) psi>|^2 on 2n qubits. n <= 6.
double inefficient_imaginarity_probability(const QuantumState& psi);

/// chi(U) = (L (x) L)(|Phi><Phi|) with L = D o U(.)U^dag o D acting on each
/// n-qubit half, D the full dephasing. n <= 3.
DensityMatrix coherence_power_chi(const UnitaryMatrix& u);

/// Outcome distribution of Bell measurements on psi (x) psi: for each qubit j,
/// CNOT from copy-1 qubit j onto copy-2 qubit j, then H on copy-1 qubit j.
/// Copy-1 bit a_j becomes r_{2j-1} and copy-2 bit b_j becomes r_{2j}.
/// Indexed by the Pauli label r. n <= 6.
std::vector<double> bell_outcome_distribution(const QuantumState& psi);

EstimateReport swap_test(const DensityMatrix& rho, const DensityMatrix& sigma,
                         const ShotBudget& budget, const Seed& seed);

EstimateReport estimate_hs_coherence(const QuantumState& psi, const ShotBudget& budget,
                                     const Seed& seed);

EstimateReport estimate_unitary_imaginarity(const UnitaryMatrix& u, const ShotBudget& budget,
                                            const Seed& seed);

/// 1 - 2^n * (success fraction); range 2^n.
EstimateReport estimate_state_imaginarity_inefficient(const QuantumState& psi,
                                                      const ShotBudget& budget, const Seed& seed);

/// 2 * (accept fraction) - 1, targeting 2^{-n} sum |U_kl|^4.
EstimateReport estimate_coherence_power(const UnitaryMatrix& u, const ShotBudget& budget,
                                        const Seed& seed);

struct BellSampleReport {
  int n = 0;
  std::uint64_t shots = 0;
  Seed seed;
  std::vector<double> exact;
  /// Pauli label -> count, only labels that occurred.
  std::map<std::uint64_t, std::uint64_t> counts;

  /// Total-variation distance between empirical and exact distributions.
  double total_variation() const;
};

BellSampleReport bell_sample(const QuantumState& psi, const ShotBudget& budget, const Seed& seed);

/// Bell-sample r, then measure sigma_r on two fresh copies; the estimate is
/// 1 - mean(lambda_1 lambda_2). Uses 4M copies.
EstimateReport alg1_stabilizer_imaginarity(const QuantumState& psi, std::uint64_t M,
                                           const Seed& seed, double confidence = 0.95);

/// Protocol names understood by the CLI.
const std::vector<std::string>& protocol_names();

}  // namespace psr

#endif  // PSR_PROTOCOLS_H
