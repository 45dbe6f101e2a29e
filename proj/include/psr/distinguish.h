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

#ifndef PSR_DISTINGUISH_H
#define PSR_DISTINGUISH_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "psr/protocols.h"
#include "psr/qcore.h"
#include "psr/seed.h"
#include "psr/stats.h"

/// Two-player indistinguishability experiment: the challenger flips b, hands
/// the distinguisher a sample from ensemble A (b = 0) or B (b = 1), and scores
/// the guess.
namespace psr {

using Sample = std::variant<QuantumState, DensityMatrix, UnitaryMatrix>;

struct Ensemble {
  std::string name;
  std::function<Sample(Rng&)> draw;
};

Ensemble haar_state_ensemble(int n);
/// Haar states followed by the depolarizing channel on `qubit`.
Ensemble depolarized_haar_ensemble(int n, double p, int qubit = 0);
Ensemble subset_phase_ensemble(int n, std::size_t K);
Ensemble haar_unitary_ensemble(int n);
Ensemble orthogonal_unitary_ensemble(int n);
Ensemble diagonal_unitary_ensemble(int n);

struct EnsembleParams {
  int n = 2;
  std::size_t K = 4;
  double p = 0.1;
};

/// By name: haar-state, depolarized-haar, subset-phase, haar-unitary,
/// orthogonal-unitary, diagonal-unitary.
Ensemble make_ensemble(const std::string& name, const EnsembleParams& params);
const std::vector<std::string>& ensemble_names();

struct Distinguisher {
  std::string name;
  /// swap-test (purity), hs-coherence, unitary-imaginarity or coherence-power.
  std::string protocol;
  ShotBudget budget;
  double threshold = 0.5;
  /// Guess A when the estimate is above the threshold; otherwise when below.
  /// Equality always guesses B.
  bool high_is_a = true;

  bool guesses_a(double estimate) const;

  /// Runs the protocol on one sample and returns its estimate. Throws
  /// std::invalid_argument when the sample kind does not fit the protocol.
  double query(const Sample& sample, const Seed& seed) const;
};

/// Threshold at the midpoint of the two expected estimates.
Distinguisher calibrate(std::string name, std::string protocol, ShotBudget budget,
                        double expected_a, double expected_b);

struct BuiltinConfig {
  /// Qubits for the state distinguishers.
  int n = 4;
  /// Qubits for the unitary distinguishers.
  int n_unitary = 2;
  std::size_t K = 4;
  double p = 0.1;
  std::uint64_t shots = 1000;
};

/// purity (SWAP test), unitary imaginarity (P_Phi test), coherence (Pi_C test)
/// and coherence power (dephase + SWAP test), each calibrated so that A is the
/// resource-rich ensemble: Haar states vs depolarized Haar states, Haar vs
/// real-orthogonal unitaries, Haar vs K-subset phase states, Haar vs diagonal
/// unitaries.
std::vector<Distinguisher> builtin_distinguishers(const BuiltinConfig& config = {});

/// The A and B ensembles each builtin distinguisher is calibrated for.
std::pair<Ensemble, Ensemble> builtin_ensembles(const std::string& distinguisher,
                                                const BuiltinConfig& config = {});

struct AdvantageReport {
  std::string distinguisher;
  std::string ensemble_a;
  std::string ensemble_b;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_probability = 0.0;
  /// Wilson 95% interval.
  Interval interval;
  /// Binomial standard deviation of the success probability.
  double sigma = 0.0;
  std::optional<double> helstrom_ceiling;
  Seed seed;
};

/// Trial i draws everything from child_seed(seed, i). `td`, when known, is the
/// trace distance between what the distinguisher sees under A and under B and
/// sets the Helstrom ceiling.
AdvantageReport run_experiment(const Ensemble& a, const Ensemble& b, const Distinguisher& d,
                               std::uint64_t trials, const Seed& seed,
                               std::optional<double> td = std::nullopt);

struct PseudoresourceRow {
  std::string resource;
  std::optional<std::size_t> K;
  /// g: value measured on a sampled low-resource state.
  double low = 0.0;
  /// g from its closed form.
  double low_formula = 0.0;
  /// f from its closed form.
  double high = 0.0;
  /// f as a Monte Carlo mean over Haar states, with its standard error.
  double high_monte_carlo = 0.0;
  double high_standard_error = 0.0;
  double q_max = 1.0;
  /// (f - g) / Q_max.
  double delta = 0.0;
};

std::vector<PseudoresourceRow> pseudoresource_report(int n, const std::vector<std::size_t>& Ks,
                                                     double p, const Seed& seed,
                                                     std::uint64_t samples = 200);

}  // namespace psr

#endif  // PSR_DISTINGUISH_H
