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

#include "psr/distinguish.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "psr/ensembles.h"
#include "psr/measures.h"
#include "psr/moments.h"

namespace psr {

namespace {

int sample_qubits(const Sample& s) {
  return std::visit([](const auto& v) { return v.num_qubits(); }, s);
}

const char* sample_kind(const Sample& s) {
  switch (s.index()) {
    case 0: return "state";
    case 1: return "density";
    default: return "unitary";
  }
}

DensityMatrix as_density(const Sample& s, const std::string& protocol) {
  if (const auto* psi = std::get_if<QuantumState>(&s)) return DensityMatrix::from_state(*psi);
  if (const auto* rho = std::get_if<DensityMatrix>(&s)) return *rho;
  throw std::invalid_argument(protocol + " needs a state, got a unitary");
}

const QuantumState& as_pure(const Sample& s, const std::string& protocol) {
  if (const auto* psi = std::get_if<QuantumState>(&s)) return *psi;
  throw std::invalid_argument(protocol + " needs a pure state, got a " + sample_kind(s));
}

const UnitaryMatrix& as_unitary(const Sample& s, const std::string& protocol) {
  if (const auto* u = std::get_if<UnitaryMatrix>(&s)) return *u;
  throw std::invalid_argument(protocol + " needs a unitary, got a " + sample_kind(s));
}

}  // namespace

// ---------------------------------------------------------------------------
// Ensembles

Ensemble haar_state_ensemble(int n) {
  return {"haar-state", [n](Rng& rng) -> Sample { return sample_haar_state(n, rng); }};
}

Ensemble depolarized_haar_ensemble(int n, double p, int qubit) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarized ensemble: p must lie in [0, 1]");
  return {"depolarized-haar", [n, p, qubit](Rng& rng) -> Sample {
            return depolarize(DensityMatrix::from_state(sample_haar_state(n, rng)), qubit, p);
          }};
}

Ensemble subset_phase_ensemble(int n, std::size_t K) {
  return {"subset-phase", [n, K](Rng& rng) -> Sample {
            return build_subset_phase_state(sample_subset_phase(n, K, rng));
          }};
}

Ensemble haar_unitary_ensemble(int n) {
  return {"haar-unitary", [n](Rng& rng) -> Sample { return sample_haar_unitary(n, rng); }};
}

Ensemble orthogonal_unitary_ensemble(int n) {
  return {"orthogonal-unitary", [n](Rng& rng) -> Sample { return sample_haar_orthogonal(n, rng); }};
}

Ensemble diagonal_unitary_ensemble(int n) {
  return {"diagonal-unitary", [n](Rng& rng) -> Sample { return sample_diagonal_unitary(n, rng); }};
}

const std::vector<std::string>& ensemble_names() {
  static const std::vector<std::string> names = {"haar-state",   "depolarized-haar",
                                                 "subset-phase", "haar-unitary",
                                                 "orthogonal-unitary", "diagonal-unitary"};
  return names;
}

Ensemble make_ensemble(const std::string& name, const EnsembleParams& params) {
  if (name == "haar-state") return haar_state_ensemble(params.n);
  if (name == "depolarized-haar") return depolarized_haar_ensemble(params.n, params.p);
  if (name == "subset-phase") return subset_phase_ensemble(params.n, params.K);
  if (name == "haar-unitary") return haar_unitary_ensemble(params.n);
  if (name == "orthogonal-unitary") return orthogonal_unitary_ensemble(params.n);
  if (name == "diagonal-unitary") return diagonal_unitary_ensemble(params.n);
  throw std::invalid_argument("unknown ensemble '" + name + "'");
}

// ---------------------------------------------------------------------------
// Distinguishers

bool Distinguisher::guesses_a(double estimate) const {
  return high_is_a ? estimate > threshold : estimate < threshold;
}

double Distinguisher::query(const Sample& sample, const Seed& seed) const {
  if (protocol == "swap-test") {
    const DensityMatrix rho = as_density(sample, protocol);
    return swap_test(rho, rho, budget, seed).estimate;
  }
  if (protocol == "hs-coherence") return estimate_hs_coherence(as_pure(sample, protocol), budget, seed).estimate;
  if (protocol == "unitary-imaginarity") {
    return estimate_unitary_imaginarity(as_unitary(sample, protocol), budget, seed).estimate;
  }
  if (protocol == "coherence-power") {
    return estimate_coherence_power(as_unitary(sample, protocol), budget, seed).estimate;
  }
  throw std::invalid_argument("distinguisher protocol '" + protocol + "' is not supported");
}

Distinguisher calibrate(std::string name, std::string protocol, ShotBudget budget,
                        double expected_a, double expected_b) {
  budget.validate();
  Distinguisher d;
  d.name = std::move(name);
  d.protocol = std::move(protocol);
  d.budget = budget;
  d.threshold = 0.5 * (expected_a + expected_b);
  d.high_is_a = expected_a > expected_b;
  return d;
}

std::vector<Distinguisher> builtin_distinguishers(const BuiltinConfig& c) {
  const ShotBudget budget{c.shots, 0.95};
  const auto d = static_cast<std::uint64_t>(1) << c.n;
  const auto du = static_cast<std::uint64_t>(1) << c.n_unitary;
  const double K = static_cast<double>(c.K);
  return {
      calibrate("purity", "swap-test", budget, 1.0, 1.0 - c.p + c.p * c.p / 2.0),
      calibrate("unitary-imaginarity", "unitary-imaginarity", budget,
                haar_analytics("unitary_imaginarity", du), 0.0),
      calibrate("coherence", "hs-coherence", budget, haar_analytics("hs_coherence", d), 1.0 - 1.0 / K),
      calibrate("coherence-power", "coherence-power", budget,
                haar_analytics("coherence_power_4th", du), 1.0),
  };
}

std::pair<Ensemble, Ensemble> builtin_ensembles(const std::string& distinguisher,
                                                const BuiltinConfig& c) {
  if (distinguisher == "purity") return {haar_state_ensemble(c.n), depolarized_haar_ensemble(c.n, c.p)};
  if (distinguisher == "unitary-imaginarity") {
    return {haar_unitary_ensemble(c.n_unitary), orthogonal_unitary_ensemble(c.n_unitary)};
  }
  if (distinguisher == "coherence") return {haar_state_ensemble(c.n), subset_phase_ensemble(c.n, c.K)};
  if (distinguisher == "coherence-power") {
    return {haar_unitary_ensemble(c.n_unitary), diagonal_unitary_ensemble(c.n_unitary)};
  }
  throw std::invalid_argument("unknown builtin distinguisher '" + distinguisher + "'");
}

AdvantageReport run_experiment(const Ensemble& a, const Ensemble& b, const Distinguisher& d,
                               std::uint64_t trials, const Seed& seed, std::optional<double> td) {
  if (trials == 0) throw std::invalid_argument("run_experiment: trials must be >= 1");
  {
    Rng probe = make_rng(child_seed(seed, std::numeric_limits<std::uint64_t>::max()));
    const Sample sa = a.draw(probe);
    const Sample sb = b.draw(probe);
    const bool ua = std::holds_alternative<UnitaryMatrix>(sa), ub = std::holds_alternative<UnitaryMatrix>(sb);
    if (ua != ub || sample_qubits(sa) != sample_qubits(sb)) {
      throw std::invalid_argument("run_experiment: ensembles '" + a.name + "' and '" + b.name +
                                  "' produce incompatible objects");
    }
  }
  AdvantageReport rep;
  rep.distinguisher = d.name;
  rep.ensemble_a = a.name;
  rep.ensemble_b = b.name;
  rep.trials = trials;
  rep.seed = seed;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = make_rng(child_seed(seed, i));
    const bool b_is_one = std::bernoulli_distribution(0.5)(rng);
    const Sample s = b_is_one ? b.draw(rng) : a.draw(rng);
    const Seed shot_seed{rng(), rng()};
    const bool guess_one = !d.guesses_a(d.query(s, shot_seed));
    if (guess_one == b_is_one) ++rep.successes;
  }
  const double t = static_cast<double>(trials);
  rep.success_probability = static_cast<double>(rep.successes) / t;
  rep.interval = wilson_interval(rep.successes, trials);
  rep.sigma = std::sqrt(rep.success_probability * (1.0 - rep.success_probability) / t);
  if (td) rep.helstrom_ceiling = helstrom_ceiling(*td);
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<PseudoresourceRow> pseudoresource_report(int n, const std::vector<std::size_t>& Ks,
                                                     double p, const Seed& seed,
                                                     std::uint64_t samples) {
  if (n < 1 || n > kMaxMatrixQubits) {
    throw std::invalid_argument("pseudoresource_report: n must lie in [1, " +
                                std::to_string(kMaxMatrixQubits) + "]");
  }
  if (samples < 2) throw std::invalid_argument("pseudoresource_report: need at least 2 samples");
  const std::uint64_t d = std::uint64_t{1} << n;
  Rng rng = make_rng(seed);

  std::vector<double> haar_purity, haar_coherence, haar_imag;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const QuantumState psi = sample_haar_state(n, rng);
    haar_purity.push_back(purity(DensityMatrix::from_state(psi)));
    haar_coherence.push_back(rel_entropy_coherence(psi));
    haar_imag.push_back(imaginarity_state(psi));
  }

  std::vector<PseudoresourceRow> rows;
  {
    PseudoresourceRow row;
    row.resource = "purity";
    row.low = purity(depolarize(DensityMatrix::from_state(QuantumState::zero(n)), 0, p));
    row.low_formula = 1.0 - p + p * p / 2.0;
    row.high = 1.0;
    const MeanStat m = mean_stat(haar_purity);
    row.high_monte_carlo = m.mean;
    row.high_standard_error = m.standard_error;
    row.q_max = 1.0;
    row.delta = (row.high - row.low) / row.q_max;
    rows.push_back(row);
  }
  for (std::size_t K : Ks) {
    const QuantumState low = build_subset_phase_state(sample_subset_phase(n, K, rng));
    PseudoresourceRow coh;
    coh.resource = "coherence";
    coh.K = K;
    coh.low = rel_entropy_coherence(low);
    coh.low_formula = std::log(static_cast<double>(K));
    coh.high = haar_analytics("rel_entropy_coherence", d);
    const MeanStat mc = mean_stat(haar_coherence);
    coh.high_monte_carlo = mc.mean;
    coh.high_standard_error = mc.standard_error;
    coh.q_max = n * std::log(2.0);
    coh.delta = (coh.high - coh.low) / coh.q_max;
    rows.push_back(coh);

    PseudoresourceRow im;
    im.resource = "imaginarity";
    im.K = K;
    im.low = imaginarity_state(low);
    im.low_formula = 0.0;
    im.high = haar_analytics("state_imaginarity", d);
    const MeanStat mi = mean_stat(haar_imag);
    im.high_monte_carlo = mi.mean;
    im.high_standard_error = mi.standard_error;
    im.q_max = 1.0;
    im.delta = (im.high - im.low) / im.q_max;
    rows.push_back(im);
  }
  return rows;
}

}  // namespace psr
