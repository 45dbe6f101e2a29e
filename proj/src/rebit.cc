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

#include "psr/rebit.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "psr/measures.h"

namespace psr {

namespace {

// (I (x) <f|) psi_R with <f| = (<R| + i<I|)/sqrt(2).
Vector project_flag(const RebitState& psi_r) {
  const Eigen::VectorXd& a = psi_r.amplitudes();
  const Eigen::Index d = a.size() / 2;
  Vector out(d);
  const double s = 1.0 / std::sqrt(2.0);
  for (Eigen::Index k = 0; k < d; ++k) out(k) = s * cplx(a(2 * k), a(2 * k + 1));
  return out;
}

}  // namespace

RebitState RebitState::from_amplitudes(Eigen::VectorXd amps) {
  const int total = qubits_for_dim(static_cast<std::size_t>(amps.size()));
  if (total < 1 || total > kMaxStateQubits) {
    throw std::invalid_argument("RebitState: needs between 1 and " +
                                std::to_string(kMaxStateQubits) + " rebits including the flag");
  }
  if (std::abs(amps.norm() - 1.0) > kStructuralTol) {
    throw std::invalid_argument("RebitState: amplitudes are not normalized");
  }
  return RebitState(total - 1, std::move(amps));
}

QuantumState RebitState::as_state() const {
  return QuantumState::from_amplitudes(amps_.cast<cplx>());
}

RebitState encode_rebit(const QuantumState& psi) {
  if (psi.num_qubits() + 1 > kMaxStateQubits) {
    throw std::invalid_argument("encode_rebit: encoded state exceeds the qubit cap");
  }
  const Vector& c = psi.amplitudes();
  Eigen::VectorXd out(2 * c.size());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    out(2 * k) = c(k).real();
    out(2 * k + 1) = c(k).imag();
  }
  return RebitState::from_amplitudes(std::move(out));
}

double decode_success_probability(const RebitState& psi_r) {
  return std::clamp(project_flag(psi_r).squaredNorm(), 0.0, 1.0);
}

DecodeResult decode_rebit(const RebitState& psi_r, Rng& rng,
                          std::optional<std::uint64_t> max_attempts) {
  if (max_attempts && *max_attempts == 0) {
    throw std::invalid_argument("decode_rebit: max_attempts must be >= 1");
  }
  Vector projected = project_flag(psi_r);
  std::bernoulli_distribution success(std::clamp(projected.squaredNorm(), 0.0, 1.0));
  std::uint64_t attempts = 0;
  for (;;) {
    ++attempts;
    if (success(rng)) break;
    if (max_attempts && attempts >= *max_attempts) {
      throw std::runtime_error("decode_rebit: no success after " + std::to_string(attempts) +
                               " attempts");
    }
  }
  Eigen::Index lead = 0;
  projected.cwiseAbs().maxCoeff(&lead);
  const cplx phase = projected(lead) / std::abs(projected(lead));
  projected *= std::conj(phase);
  return {QuantumState::normalized(std::move(projected)), attempts};
}

DecodeResult decode_rebit(const RebitState& psi_r, const Seed& seed,
                          std::optional<std::uint64_t> max_attempts) {
  Rng rng = make_rng(seed);
  return decode_rebit(psi_r, rng, max_attempts);
}

DensityMatrix flag_state(const RebitState& psi_r) {
  const Eigen::VectorXd& a = psi_r.amplitudes();
  double rr = 0.0, ii = 0.0, ri = 0.0;
  for (Eigen::Index k = 0; k + 1 < a.size(); k += 2) {
    rr += a(k) * a(k);
    ii += a(k + 1) * a(k + 1);
    ri += a(k) * a(k + 1);
  }
  Matrix m(2, 2);
  m(0, 0) = rr;
  m(1, 1) = ii;
  m(0, 1) = m(1, 0) = ri;
  return DensityMatrix::from_matrix(std::move(m));
}

double rebit_flag_imaginarity(const RebitState& psi_r) {
  return std::clamp(2.0 * (1.0 - purity(flag_state(psi_r))), 0.0, 1.0);
}

EstimateReport estimate_flag_imaginarity(const RebitState& psi_r, const ShotBudget& budget,
                                         const Seed& seed) {
  const DensityMatrix flag = flag_state(psi_r);
  EstimateReport r = swap_test(flag, flag, budget, seed);
  r.protocol = "flag-imaginarity";
  r.n = psi_r.num_qubits();
  r.exact = rebit_flag_imaginarity(psi_r);
  r.range = 4.0;
  // purity estimate p = 2f - 1 becomes 2(1 - p) = 4 - 4f
  const double N = static_cast<double>(r.shots);
  const double s = static_cast<double>(r.successes);
  r.estimate = 4.0 - 4.0 * s / N;
  r.sample_variance = r.shots > 1 ? 16.0 * s * (N - s) / (N * (N - 1.0)) : 0.0;
  r.half_width = hoeffding_half_width(r.range, r.shots, r.confidence);
  return r;
}

}  // namespace psr
