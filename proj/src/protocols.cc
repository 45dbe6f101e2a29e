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

#include "psr/protocols.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "psr/measures.h"

namespace psr {

namespace {

constexpr double kWeightCutoff = 1e-14;

void require_qubits(int n, int cap, const char* what) {
  if (n < 1 || n > cap) {
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " outside [1, " + std::to_string(cap) + "]");
  }
}

std::vector<int> range_of(int first, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), first);
  return v;
}

// Runs the SWAP-test circuit on |0>_anc (x) w, where w holds two m-qubit
// registers, and returns Pr[ancilla = 0].
double swap_circuit(const Vector& w, int m) {
  const int total = 2 * m + 1;
  Vector v = Vector::Zero(w.size() * 2);
  v.head(w.size()) = w;
  const Matrix h = gates::H().matrix();
  const Matrix cswap = gates::CSWAP().matrix();
  const int anc[] = {0};
  kernel::apply_matrix(v, total, h, anc);
  for (int j = 0; j < m; ++j) {
    const int t[] = {0, 1 + j, 1 + m + j};
    kernel::apply_matrix(v, total, cswap, t);
  }
  kernel::apply_matrix(v, total, h, anc);
  return v.head(w.size()).squaredNorm();
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

struct ShotOutcome {
  std::uint64_t successes = 0;
};

ShotOutcome draw_shots(double p, std::uint64_t shots, Rng& rng) {
  std::bernoulli_distribution coin(clamp01(p));
  ShotOutcome out;
  for (std::uint64_t s = 0; s < shots; ++s) out.successes += coin(rng) ? 1 : 0;
  return out;
}

// Per-shot estimator value is offset + scale * [success].
void finish(EstimateReport& r, double offset, double scale) {
  const double N = static_cast<double>(r.shots);
  const double s = static_cast<double>(r.successes);
  r.estimate = offset + scale * s / N;
  r.sample_variance = r.shots > 1 ? scale * scale * s * (N - s) / (N * (N - 1.0)) : 0.0;
  r.half_width = hoeffding_half_width(r.range, r.shots, r.confidence);
}

EstimateReport bernoulli_report(const std::string& name, int n, double p,
                                const ShotBudget& budget, const Seed& seed, double range,
                                std::uint64_t copies_per_shot) {
  budget.validate();
  EstimateReport r;
  r.protocol = name;
  r.n = n;
  r.probability = clamp01(p);
  r.shots = budget.shots;
  r.copies = copies_per_shot * budget.shots;
  r.range = range;
  r.confidence = budget.confidence;
  r.seed = seed;
  Rng rng = make_rng(seed);
  r.successes = draw_shots(p, budget.shots, rng).successes;
  return r;
}

}  // namespace

void ShotBudget::validate() const {
  if (shots < 1) throw std::invalid_argument("shot budget must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
}

std::uint64_t hoeffding_budget(double delta, double nu, double range) {
  if (!(delta > 0.0)) throw std::invalid_argument("hoeffding_budget: delta must be > 0");
  if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("hoeffding_budget: nu must lie in (0, 1)");
  if (!(range > 0.0)) throw std::invalid_argument("hoeffding_budget: range must be > 0");
  const double m = range * range / (2.0 * delta * delta) * std::log(2.0 / nu);
  return static_cast<std::uint64_t>(std::ceil(m - 1e-9));
}

double hoeffding_half_width(double range, std::uint64_t shots, double confidence) {
  if (shots < 1) throw std::invalid_argument("hoeffding_half_width: shots must be >= 1");
  return range * std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(shots)));
}

// ---------------------------------------------------------------------------
// Exact outcome probabilities from the circuits

double swap_test_probability(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.num_qubits() != sigma.num_qubits()) {
    throw std::invalid_argument("swap_test: states have different qubit counts");
  }
  const int m = rho.num_qubits();
  Eigen::SelfAdjointEigenSolver<Matrix> ea(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Matrix> eb(sigma.matrix());
  double p = 0.0;
  for (Eigen::Index i = 0; i < ea.eigenvalues().size(); ++i) {
    const double wi = ea.eigenvalues()(i);
    if (wi < kWeightCutoff) continue;
    for (Eigen::Index j = 0; j < eb.eigenvalues().size(); ++j) {
      const double wj = eb.eigenvalues()(j);
      if (wj < kWeightCutoff) continue;
      const Vector w = kron(Vector(ea.eigenvectors().col(i)), Vector(eb.eigenvectors().col(j)));
      p += wi * wj * swap_circuit(w, m);
    }
  }
  return clamp01(p);
}

double swap_test_probability(const DensityMatrix& joint) {
  const int total = joint.num_qubits();
  if (total % 2 != 0) throw std::invalid_argument("swap_test: joint state needs an even qubit count");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(joint.matrix());
  double p = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double w = eig.eigenvalues()(i);
    if (w < kWeightCutoff) continue;
    p += w * swap_circuit(eig.eigenvectors().col(i), total / 2);
  }
  return clamp01(p);
}

double hs_coherence_probability(const QuantumState& psi) {
  const int n = psi.num_qubits();
  const Vector& a = psi.amplitudes();
  if (2 * n <= kMaxStateQubits) {
    Vector v = kron(a, a);
    Matrix proj = Matrix::Zero(4, 4);
    proj(0, 0) = proj(3, 3) = 1.0;
    for (int j = 0; j < n; ++j) {
      const int t[] = {j, n + j};
      kernel::apply_matrix(v, 2 * n, proj, t);
    }
    return clamp01(v.squaredNorm());
  }
  // Index-wise projector action on the product amplitude a_k a_l: every pair
  // (k_j, l_j) must agree.
  const std::uint64_t d = psi.dim();
  double p = 0.0;
  for (std::uint64_t k = 0; k < d; ++k) {
    const double wk = std::norm(a(static_cast<Eigen::Index>(k)));
    if (wk == 0.0) continue;
    for (std::uint64_t l = 0; l < d; ++l) {
      bool keep = true;
      for (int j = 0; j < n && keep; ++j) {
        const int b = kernel::bit_of(n, j);
        keep = ((k >> b) & 1U) == ((l >> b) & 1U);
      }
      if (keep) p += wk * std::norm(a(static_cast<Eigen::Index>(l)));
    }
  }
  return clamp01(p);
}

double unitary_phi_probability_circuit(const UnitaryMatrix& u) {
  const int n = u.num_qubits();
  require_qubits(n, 3, "unitary imaginarity test");
  const QuantumState phi = maximally_entangled_state(n);
  Vector v = phi.amplitudes();
  const auto a = range_of(0, n);
  const auto b = range_of(n, n);
  kernel::apply_matrix(v, 2 * n, u.matrix(), a);
  kernel::apply_matrix(v, 2 * n, u.matrix(), b);
  return clamp01(std::norm(phi.amplitudes().dot(v)));
}

double inefficient_imaginarity_probability(const QuantumState& psi) {
  const int n = psi.num_qubits();
  require_qubits(n, kMaxStateQubits / 2, "state imaginarity estimator");
  const Vector v = kron(psi.amplitudes(), psi.amplitudes());
  return clamp01(std::norm(maximally_entangled_state(n).amplitudes().dot(v)));
}

DensityMatrix coherence_power_chi(const UnitaryMatrix& u) {
  const int n = u.num_qubits();
  require_qubits(n, kMaxMatrixQubits / 2, "coherence power test");
  DensityMatrix chi = DensityMatrix::from_state(maximally_entangled_state(n));
  for (const auto& half : {range_of(0, n), range_of(n, n)}) {
    chi = dephase(chi, half);
    chi = apply_unitary(u, chi, half);
    chi = dephase(chi, half);
  }
  return chi;
}

std::vector<double> bell_outcome_distribution(const QuantumState& psi) {
  const int n = psi.num_qubits();
  require_qubits(n, kMaxPauliQubits, "Bell sampling");
  Vector v = kron(psi.amplitudes(), psi.amplitudes());
  const Matrix cx = gates::CNOT().matrix();
  const Matrix h = gates::H().matrix();
  for (int j = 0; j < n; ++j) {
    const int pair[] = {j, n + j};
    const int first[] = {j};
    kernel::apply_matrix(v, 2 * n, cx, pair);
    kernel::apply_matrix(v, 2 * n, h, first);
  }
  std::vector<double> p(std::size_t{1} << (2 * n), 0.0);
  for (std::uint64_t idx = 0; idx < p.size(); ++idx) {
    std::uint64_t r = 0;
    for (int j = 0; j < n; ++j) {
      const std::uint64_t aj = (idx >> kernel::bit_of(2 * n, j)) & 1U;
      const std::uint64_t bj = (idx >> kernel::bit_of(2 * n, n + j)) & 1U;
      r |= ((aj << 1) | bj) << (2 * (n - 1 - j));
    }
    p[r] += std::norm(v(static_cast<Eigen::Index>(idx)));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Estimators

EstimateReport swap_test(const DensityMatrix& rho, const DensityMatrix& sigma,
                         const ShotBudget& budget, const Seed& seed) {
  const double p = swap_test_probability(rho, sigma);
  EstimateReport r = bernoulli_report("swap-test", rho.num_qubits(), p, budget, seed, 2.0, 2);
  r.exact = (rho.matrix() * sigma.matrix()).trace().real();
  finish(r, -1.0, 2.0);
  return r;
}

EstimateReport estimate_hs_coherence(const QuantumState& psi, const ShotBudget& budget,
                                     const Seed& seed) {
  const double p = hs_coherence_probability(psi);
  EstimateReport r = bernoulli_report("hs-coherence", psi.num_qubits(), p, budget, seed, 1.0, 2);
  r.exact = hs_coherence(psi);
  finish(r, 1.0, -1.0);
  return r;
}

EstimateReport estimate_unitary_imaginarity(const UnitaryMatrix& u, const ShotBudget& budget,
                                            const Seed& seed) {
  const double p = unitary_phi_probability_circuit(u);
  EstimateReport r =
      bernoulli_report("unitary-imaginarity", u.num_qubits(), p, budget, seed, 1.0, 2);
  r.exact = imaginarity_unitary(u);
  finish(r, 1.0, -1.0);
  return r;
}

EstimateReport estimate_state_imaginarity_inefficient(const QuantumState& psi,
                                                      const ShotBudget& budget, const Seed& seed) {
  const double p = inefficient_imaginarity_probability(psi);
  const double d = static_cast<double>(psi.dim());
  EstimateReport r =
      bernoulli_report("state-imaginarity-inefficient", psi.num_qubits(), p, budget, seed, d, 2);
  r.exact = imaginarity_state(psi);
  finish(r, 1.0, -d);
  return r;
}

EstimateReport estimate_coherence_power(const UnitaryMatrix& u, const ShotBudget& budget,
                                        const Seed& seed) {
  const double p = swap_test_probability(coherence_power_chi(u));
  EstimateReport r = bernoulli_report("coherence-power", u.num_qubits(), p, budget, seed, 2.0, 2);
  r.exact = hs_coherence_power(u);
  finish(r, -1.0, 2.0);
  return r;
}

double BellSampleReport::total_variation() const {
  double tv = 0.0;
  for (std::uint64_t r = 0; r < exact.size(); ++r) {
    const auto it = counts.find(r);
    const double emp = it == counts.end() ? 0.0
                                          : static_cast<double>(it->second) / static_cast<double>(shots);
    tv += std::abs(emp - exact[r]);
  }
  return 0.5 * tv;
}

BellSampleReport bell_sample(const QuantumState& psi, const ShotBudget& budget, const Seed& seed) {
  budget.validate();
  BellSampleReport rep;
  rep.n = psi.num_qubits();
  rep.shots = budget.shots;
  rep.seed = seed;
  rep.exact = bell_outcome_distribution(psi);
  Rng rng = make_rng(seed);
  std::discrete_distribution<std::uint64_t> dist(rep.exact.begin(), rep.exact.end());
  for (std::uint64_t s = 0; s < budget.shots; ++s) ++rep.counts[dist(rng)];
  return rep;
}

EstimateReport alg1_stabilizer_imaginarity(const QuantumState& psi, std::uint64_t M,
                                           const Seed& seed, double confidence) {
  const ShotBudget budget{M, confidence};
  budget.validate();
  const int n = psi.num_qubits();
  const std::vector<double> bell = bell_outcome_distribution(psi);
  Rng rng = make_rng(seed);
  std::discrete_distribution<std::uint64_t> draw_label(bell.begin(), bell.end());
  std::unordered_map<std::uint64_t, double> expectation;
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  EstimateReport r;
  r.protocol = "alg1-stabilizer-imaginarity";
  r.n = n;
  r.shots = M;
  r.copies = 4 * M;
  r.range = 2.0;
  r.confidence = confidence;
  r.seed = seed;
  for (std::uint64_t m = 0; m < M; ++m) {
    const std::uint64_t label = draw_label(rng);
    auto it = expectation.find(label);
    if (it == expectation.end()) {
      it = expectation.emplace(label, pauli_expectation(psi, PauliString::from_index(n, label))).first;
    }
    const double plus = clamp01(0.5 * (1.0 + it->second));
    const int l1 = unif(rng) < plus ? 1 : -1;
    const int l2 = unif(rng) < plus ? 1 : -1;
    if (l1 * l2 < 0) ++r.successes;
  }
  r.exact = stabilizer_imaginarity(psi);
  finish(r, 0.0, 2.0);
  return r;
}

const std::vector<std::string>& protocol_names() {
  static const std::vector<std::string> names = {
      "swap-test",       "hs-coherence",  "unitary-imaginarity", "state-imaginarity-inefficient",
      "coherence-power", "bell-sampling", "alg1-stabilizer-imaginarity"};
  return names;
}

}  // namespace psr
