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

#include "psr/moments.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "psr/ensembles.h"

namespace psr {

namespace {

std::uint64_t moment_dim(int n, int t) {
  if (n < 1 || t < 1 || t > kMaxMomentCopies) {
    throw std::invalid_argument("moment operators need n >= 1 and 1 <= t <= " +
                                std::to_string(kMaxMomentCopies));
  }
  const std::uint64_t d = std::uint64_t{1} << std::min(n, 20);
  std::uint64_t dim = 1;
  for (int c = 0; c < t; ++c) {
    if (dim > kMaxMomentDim / d) dim = kMaxMomentDim + 1;
    else dim *= d;
  }
  if (n > 20 || dim > kMaxMomentDim) {
    throw std::invalid_argument("moment dimension d^t exceeds " + std::to_string(kMaxMomentDim));
  }
  return dim;
}

Vector tensor_power(const Vector& v, int t) {
  Vector out = v;
  for (int c = 1; c < t; ++c) out = kron(out, v);
  return out;
}

double binomial(double n, double k) {
  double r = 1.0;
  for (int i = 1; i <= static_cast<int>(k); ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void MomentOperator::validate() const {
  if (mat.rows() != mat.cols()) throw std::logic_error("MomentOperator: matrix is not square");
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > kIdentityTol) {
    throw std::logic_error("MomentOperator: not Hermitian");
  }
  if (std::abs(mat.trace() - cplx(1.0, 0.0)) > kIdentityTol) {
    throw std::logic_error("MomentOperator: trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(mat, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kIdentityTol) {
    throw std::logic_error("MomentOperator: not positive semidefinite");
  }
}

Matrix symmetric_projector(int n, int t) {
  const std::uint64_t D = moment_dim(n, t);
  const std::uint64_t d = std::uint64_t{1} << n;
  std::vector<int> perm(static_cast<std::size_t>(t));
  std::iota(perm.begin(), perm.end(), 0);
  double factorial = 1.0;
  for (int c = 2; c <= t; ++c) factorial *= c;

  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(t));
  do {
    for (std::uint64_t idx = 0; idx < D; ++idx) {
      std::uint64_t rest = idx;
      for (int c = t - 1; c >= 0; --c) {
        digits[static_cast<std::size_t>(c)] = rest % d;
        rest /= d;
      }
      std::uint64_t out = 0;
      for (int c = 0; c < t; ++c) out = out * d + digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(c)])];
      p(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(idx)) += 1.0 / factorial;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

MomentOperator haar_moment(int n, int t) {
  Matrix p = symmetric_projector(n, t);
  // Idempotence on a fixed probe vector.
  Rng rng = make_rng(Seed{0x5eed, static_cast<std::uint64_t>(t)});
  std::normal_distribution<double> normal;
  Vector probe(p.rows());
  for (Eigen::Index k = 0; k < probe.size(); ++k) probe(k) = cplx(normal(rng), normal(rng));
  const Vector once = p * probe;
  const Vector twice = p * once;
  if ((twice - once).norm() > kIdentityTol * std::max(1.0, once.norm())) {
    throw std::logic_error("symmetric projector failed the idempotence check");
  }
  const double d = std::ldexp(1.0, n);
  p /= binomial(d + t - 1, t);
  return MomentOperator{n, t, std::move(p)};
}

MomentOperator ensemble_moment(std::span<const QuantumState> states, int t) {
  if (states.empty()) throw std::invalid_argument("ensemble_moment: empty ensemble");
  const int n = states.front().num_qubits();
  const std::uint64_t D = moment_dim(n, t);
  Matrix acc = Matrix::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
  for (const QuantumState& s : states) {
    if (s.num_qubits() != n) throw std::invalid_argument("ensemble_moment: mixed qubit counts");
    const Vector v = tensor_power(s.amplitudes(), t);
    acc.noalias() += v * v.adjoint();
  }
  acc /= static_cast<double>(states.size());
  return MomentOperator{n, t, std::move(acc)};
}

std::uint64_t subset_phase_configurations(int n, std::size_t K) {
  if (n < 1 || n > kMaxStateQubits) throw std::invalid_argument("subset_phase_configurations: n out of range");
  const std::uint64_t d = std::uint64_t{1} << n;
  if (K < 1 || K > d) throw std::invalid_argument("subset_phase_configurations: K out of range");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (K >= 64) return kMax;
  unsigned __int128 c = 1;
  const std::uint64_t k = std::min<std::uint64_t>(K, d - K);
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (d - k + i) / i;
    if (c > kMax) return kMax;
  }
  c <<= K;
  return c > kMax ? kMax : static_cast<std::uint64_t>(c);
}

SubsetPhaseMoment subset_phase_moment(int n, std::size_t K, int t, const Seed& seed,
                                      std::uint64_t samples) {
  const std::uint64_t D = moment_dim(n, t);
  const std::uint64_t configs = subset_phase_configurations(n, K);
  const Eigen::Index dd = static_cast<Eigen::Index>(D);
  const std::uint64_t d = std::uint64_t{1} << n;
  SubsetPhaseMoment out;
  Matrix acc = Matrix::Zero(dd, dd);

  if (configs <= kMaxEnumeratedConfigs) {
    std::vector<std::uint64_t> subset(K);
    std::iota(subset.begin(), subset.end(), 0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(K));
    for (;;) {
      for (std::uint64_t f = 0; f < (std::uint64_t{1} << K); ++f) {
        Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
        for (std::size_t i = 0; i < K; ++i) {
          v(static_cast<Eigen::Index>(subset[i])) = ((f >> i) & 1U) ? -amp : amp;
        }
        const Vector vt = tensor_power(v, t);
        acc.noalias() += vt * vt.adjoint();
      }
      // next combination in lexicographic order
      std::size_t i = K;
      while (i > 0 && subset[i - 1] == d - K + (i - 1)) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < K; ++j) subset[j] = subset[j - 1] + 1;
    }
    acc /= static_cast<double>(configs);
    out.exact = true;
    out.configurations = configs;
  } else {
    if (samples < 2) throw std::invalid_argument("subset_phase_moment: need at least 2 samples");
    Rng rng = make_rng(seed);
    Eigen::MatrixXd second = Eigen::MatrixXd::Zero(dd, dd);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const QuantumState psi = build_subset_phase_state(sample_subset_phase(n, K, rng));
      const Vector vt = tensor_power(psi.amplitudes(), t);
      const Matrix outer = vt * vt.adjoint();
      acc += outer;
      second += outer.cwiseAbs2();
    }
    const double m = static_cast<double>(samples);
    acc /= m;
    const double var_sum = (second / m - acc.cwiseAbs2()).sum() * m / (m - 1.0);
    out.exact = false;
    out.configurations = samples;
    out.standard_error = std::sqrt(std::max(var_sum, 0.0) / m);
  }
  out.moment = MomentOperator{n, t, std::move(acc)};
  return out;
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  return 0.5 * trace_norm(a - b);
}

double trace_distance(const MomentOperator& a, const MomentOperator& b) {
  return trace_distance(a.mat, b.mat);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

double helstrom_probability(double td) {
  if (!(td >= 0.0 && td <= 0.5)) {
    throw std::domain_error("helstrom_probability: td = " + std::to_string(td) +
                            " outside [0, 1/2] would not give a probability");
  }
  return 0.5 + td;
}

double helstrom_ceiling(double td) {
  if (!(td >= 0.0)) throw std::domain_error("helstrom_ceiling: negative trace distance");
  return std::min(1.0, 0.5 + td);
}

const std::vector<std::string>& haar_analytics_names() {
  static const std::vector<std::string> names = {"state_imaginarity", "unitary_imaginarity",
                                                 "hs_coherence", "coherence_power_4th",
                                                 "rel_entropy_coherence"};
  return names;
}

double haar_analytics(const std::string& name, std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("haar_analytics: d must be >= 1");
  const double dd = static_cast<double>(d);
  if (name == "state_imaginarity" || name == "hs_coherence") return 1.0 - 2.0 / (dd + 1.0);
  if (name == "unitary_imaginarity") return 1.0 - 2.0 / (dd * (dd + 1.0));
  if (name == "coherence_power_4th") return 2.0 / (dd + 1.0);
  if (name == "rel_entropy_coherence") {
    double s = 0.0;
    for (std::uint64_t k = 2; k <= d; ++k) s += 1.0 / static_cast<double>(k);
    return s;
  }
  throw std::invalid_argument("haar_analytics: unknown quantity '" + name + "'");
}

std::vector<MomentBoundRow> moment_bound_table(int n, std::span<const int> ts,
                                               std::span<const std::size_t> Ks, const Seed& seed) {
  std::vector<MomentBoundRow> rows;
  for (int t : ts) {
    const MomentOperator haar = haar_moment(n, t);
    for (std::size_t K : Ks) {
      const SubsetPhaseMoment sp = subset_phase_moment(n, K, t, seed);
      MomentBoundRow row;
      row.n = n;
      row.t = t;
      row.K = K;
      row.td = trace_distance(sp.moment, haar);
      row.c = row.td * static_cast<double>(K) / static_cast<double>(t * t);
      row.exact = sp.exact;
      row.standard_error = sp.standard_error;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace psr
