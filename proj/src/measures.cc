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

#include "psr/measures.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psr {

namespace {

double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void check_pauli_cap(int n) {
  if (n > kMaxPauliQubits) {
    throw std::invalid_argument("Pauli enumeration limited to " + std::to_string(kMaxPauliQubits) +
                                " qubits");
  }
}

}  // namespace

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_kl|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

double imaginarity_state(const QuantumState& psi) {
  const Vector& a = psi.amplitudes();
  // <psi|psi*> = sum conj(c_k)^2.
  cplx s = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) s += std::conj(a(k) * a(k));
  return clamp01(1.0 - std::norm(s));
}

double robustness_imaginarity(const DensityMatrix& rho) {
  const Matrix diff = rho.matrix() - rho.matrix().transpose();
  return 0.5 * trace_norm(diff);
}

double unitary_phi_probability(const UnitaryMatrix& u) {
  const Matrix& m = u.matrix();
  const cplx tr = m.cwiseProduct(m).sum();  // tr(U U^T) = sum_kl U_kl^2
  const double d = static_cast<double>(u.dim());
  return clamp01(std::norm(tr) / (d * d));
}

double imaginarity_unitary(const UnitaryMatrix& u) {
  const Matrix& m = u.matrix();
  const cplx tr = (m.adjoint() * m.conjugate()).trace();
  const double d = static_cast<double>(u.dim());
  return clamp01(1.0 - std::norm(tr) / (d * d));
}

double rel_entropy_coherence(const QuantumState& psi) {
  double c = 0.0;
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) c -= xlogx(std::norm(psi.amplitudes()(k)));
  return std::max(c, 0.0);
}

double hs_coherence(const QuantumState& psi) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) {
    const double p = std::norm(psi.amplitudes()(k));
    s += p * p;
  }
  return std::max(1.0 - s, 0.0);
}

std::size_t cardinality(const QuantumState& psi, double threshold) {
  std::size_t count = 0;
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) {
    if (std::abs(psi.amplitudes()(k)) > threshold) ++count;
  }
  return count;
}

double max_rel_entropy_coherence(const QuantumState& psi, double threshold) {
  return std::log(static_cast<double>(cardinality(psi, threshold)));
}

double coherence_power(const UnitaryMatrix& u) {
  const Matrix& m = u.matrix();
  double s = 0.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) s -= xlogx(std::norm(m(r, c)));
  }
  return std::max(s / static_cast<double>(u.dim()), 0.0);
}

double hs_coherence_power(const UnitaryMatrix& u) {
  const Matrix& m = u.matrix();
  double s = 0.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const double p = std::norm(m(r, c));
      s += p * p;
    }
  }
  return s / static_cast<double>(u.dim());
}

std::size_t cardinality(const UnitaryMatrix& u, double threshold) {
  const Matrix& m = u.matrix();
  std::size_t count = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) > threshold) ++count;
    }
  }
  return count;
}

double coherence_power_max(const UnitaryMatrix& u, double threshold) {
  return std::log(static_cast<double>(cardinality(u, threshold)) / static_cast<double>(u.dim()));
}

double coherence_power_collision(const UnitaryMatrix& u) { return -std::log(hs_coherence_power(u)); }

double stabilizer_imaginarity(const QuantumState& psi) {
  const int n = psi.num_qubits();
  check_pauli_cap(n);
  const Vector& a = psi.amplitudes();
  const Vector conj = a.conjugate();
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  double s = 0.0;
  for (std::uint64_t r = 0; r < count; ++r) {
    const PauliString sigma = PauliString::from_index(n, r);
    const double bell = std::norm(a.dot(sigma.apply(conj)));
    if (bell == 0.0) continue;
    const double expv = std::norm(a.dot(sigma.apply(a)));
    s += bell * expv;
  }
  return clamp01(1.0 - s / static_cast<double>(psi.dim()));
}

std::vector<double> bell_distribution(const QuantumState& psi) {
  const int n = psi.num_qubits();
  check_pauli_cap(n);
  const Vector& a = psi.amplitudes();
  const Vector conj = a.conjugate();
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  std::vector<double> p(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    p[r] = std::norm(a.dot(PauliString::from_index(n, r).apply(conj))) / static_cast<double>(psi.dim());
  }
  return p;
}

const std::vector<std::string>& state_measure_names() {
  static const std::vector<std::string> names = {
      "purity",        "imaginarity",   "robustness",  "coherence",
      "hs-coherence",  "max-coherence", "stabilizer-imaginarity"};
  return names;
}

const std::vector<std::string>& unitary_measure_names() {
  static const std::vector<std::string> names = {
      "unitary-imaginarity", "coherence-power", "hs-coherence-power", "phi-probability"};
  return names;
}

ResourceValue evaluate_state_measure(const std::string& name, const QuantumState& psi) {
  ResourceValue out{name, 0.0, psi.num_qubits()};
  if (name == "purity") {
    out.value = 1.0;  // pure input
  } else if (name == "imaginarity") {
    out.value = imaginarity_state(psi);
  } else if (name == "robustness") {
    if (psi.num_qubits() > kMaxMatrixQubits) {
      throw std::invalid_argument("robustness: density matrices limited to " +
                                  std::to_string(kMaxMatrixQubits) + " qubits");
    }
    out.value = robustness_imaginarity(DensityMatrix::from_state(psi));
  } else if (name == "coherence") {
    out.value = rel_entropy_coherence(psi);
  } else if (name == "hs-coherence") {
    out.value = hs_coherence(psi);
  } else if (name == "max-coherence") {
    out.value = max_rel_entropy_coherence(psi);
  } else if (name == "stabilizer-imaginarity") {
    out.value = stabilizer_imaginarity(psi);
  } else {
    throw std::invalid_argument("unknown state measure '" + name + "'");
  }
  return out;
}

ResourceValue evaluate_unitary_measure(const std::string& name, const UnitaryMatrix& u) {
  ResourceValue out{name, 0.0, u.num_qubits()};
  if (name == "unitary-imaginarity") {
    out.value = imaginarity_unitary(u);
  } else if (name == "coherence-power") {
    out.value = coherence_power(u);
  } else if (name == "hs-coherence-power") {
    out.value = hs_coherence_power(u);
  } else if (name == "phi-probability") {
    out.value = unitary_phi_probability(u);
  } else {
    throw std::invalid_argument("unknown unitary measure '" + name + "'");
  }
  return out;
}

}  // namespace psr
