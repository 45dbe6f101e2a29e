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

#ifndef PSR_MEASURES_H
#define PSR_MEASURES_H

#include <cstddef>
#include <string>
#include <vector>

#include "psr/qcore.h"

/// Exact resource measures. Logarithms are natural; 0 ln 0 := 0.
namespace psr {

struct ResourceValue {
  std::string name;
  double value = 0.0;
  int n = 0;
};

/// Amplitudes with |c| at or below this count as zero in cardinality measures.
inline constexpr double kSupportThreshold = 1e-12;

/// Cap for the 4^n Pauli enumeration.
inline constexpr int kMaxPauliQubits = 6;

/// tr(rho^2).
double purity(const DensityMatrix& rho);

/// 1 - |<psi|psi*>|^2.
double imaginarity_state(const QuantumState& psi);

/// (1/2) ||rho - rho^T||_1.
double robustness_imaginarity(const DensityMatrix& rho);

/// 4^{-n} |tr(U U^T)|^2, the Choi-state overlap probability.
double unitary_phi_probability(const UnitaryMatrix& u);

/// 1 - 4^{-n} |tr(U^dag U*)|^2.
double imaginarity_unitary(const UnitaryMatrix& u);

/// -sum |c_k|^2 ln |c_k|^2.
double rel_entropy_coherence(const QuantumState& psi);

/// 1 - sum |c_k|^4.
double hs_coherence(const QuantumState& psi);

/// Number of amplitudes with |c_k| > threshold.
std::size_t cardinality(const QuantumState& psi, double threshold = kSupportThreshold);

/// ln card(psi).
double max_rel_entropy_coherence(const QuantumState& psi, double threshold = kSupportThreshold);

/// -2^{-n} sum_{k,l} |U_kl|^2 ln |U_kl|^2.
double coherence_power(const UnitaryMatrix& u);

/// 2^{-n} sum_{k,l} |U_kl|^4.
double hs_coherence_power(const UnitaryMatrix& u);

/// Number of matrix entries with |U_kl| > threshold.
std::size_t cardinality(const UnitaryMatrix& u, double threshold = kSupportThreshold);

/// ln(2^{-n} card(U)), the Renyi-0 upper end of the coherence-power chain.
double coherence_power_max(const UnitaryMatrix& u, double threshold = kSupportThreshold);

/// -ln(2^{-n} sum |U_kl|^4), the Renyi-2 lower end of the chain.
double coherence_power_collision(const UnitaryMatrix& u);

/// 1 - 2^{-n} sum_sigma |<psi|sigma|psi*>|^2 |<psi|sigma|psi>|^2 over all 4^n
/// Pauli strings. Throws std::invalid_argument above kMaxPauliQubits.
double stabilizer_imaginarity(const QuantumState& psi);

/// P(r) = 2^{-n} |<psi|sigma_r|psi*>|^2 indexed by the Pauli label r.
std::vector<double> bell_distribution(const QuantumState& psi);

/// Measure names accepted by evaluate_state_measure.
const std::vector<std::string>& state_measure_names();
/// Measure names accepted by evaluate_unitary_measure.
const std::vector<std::string>& unitary_measure_names();

/// Dispatch by name; throws std::invalid_argument for unknown names.
ResourceValue evaluate_state_measure(const std::string& name, const QuantumState& psi);
ResourceValue evaluate_unitary_measure(const std::string& name, const UnitaryMatrix& u);

}  // namespace psr

#endif  // PSR_MEASURES_H
