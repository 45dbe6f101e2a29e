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

#include "psr/ensembles.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace psr {

namespace {

void check_state_qubits(int n) {
  if (n < 1 || n > kMaxStateQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxStateQubits) + "]");
  }
}

void check_matrix_qubits(int n) {
  if (n < 1 || n > kMaxMatrixQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxMatrixQubits) + "]");
  }
}

std::string to_bitstring(std::uint64_t x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int b = 0; b < n; ++b) {
    if ((x >> b) & 1U) s[static_cast<std::size_t>(n - 1 - b)] = '1';
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// SubsetPhaseSpec

void SubsetPhaseSpec::validate() const {
  check_state_qubits(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (support.empty() || support.size() > dim) {
    throw std::invalid_argument("SubsetPhaseSpec: K must lie in [1, 2^n]");
  }
  if (signs.size() != support.size()) {
    throw std::invalid_argument("SubsetPhaseSpec: one sign bit per support element required");
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= dim) throw std::invalid_argument("SubsetPhaseSpec: string out of range");
    if (i > 0 && support[i] <= support[i - 1]) {
      throw std::invalid_argument(support[i] == support[i - 1]
                                      ? "SubsetPhaseSpec: duplicate string in support"
                                      : "SubsetPhaseSpec: support is not sorted");
    }
    if (signs[i] > 1) throw std::invalid_argument("SubsetPhaseSpec: sign bits must be 0 or 1");
  }
}

std::string SubsetPhaseSpec::to_text() const {
  validate();
  std::ostringstream os;
  os << n << ' ' << support.size() << '\n';
  for (std::size_t i = 0; i < support.size(); ++i) {
    os << to_bitstring(support[i], n) << ' ' << static_cast<int>(signs[i]) << '\n';
  }
  return os.str();
}

SubsetPhaseSpec SubsetPhaseSpec::from_text(const std::string& text) {
  std::istringstream is(text);
  SubsetPhaseSpec spec;
  std::size_t k = 0;
  if (!(is >> spec.n >> k)) throw std::invalid_argument("SubsetPhaseSpec: bad header line");
  for (std::size_t i = 0; i < k; ++i) {
    std::string bits;
    int f = 0;
    if (!(is >> bits >> f)) throw std::invalid_argument("SubsetPhaseSpec: truncated entry list");
    if (static_cast<int>(bits.size()) != spec.n) {
      throw std::invalid_argument("SubsetPhaseSpec: bitstring length differs from n");
    }
    std::uint64_t x = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("SubsetPhaseSpec: bad bitstring");
      x = (x << 1) | static_cast<std::uint64_t>(c == '1');
    }
    if (f != 0 && f != 1) throw std::invalid_argument("SubsetPhaseSpec: sign bit must be 0 or 1");
    spec.support.push_back(x);
    spec.signs.push_back(static_cast<std::uint8_t>(f));
  }
  std::string extra;
  if (is >> extra) throw std::invalid_argument("SubsetPhaseSpec: trailing content");
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------

bool keyed_bit(const Seed& key, std::uint64_t input) {
  const std::uint64_t k = mix64(key.master ^ mix64(key.stream ^ 0x6A09E667F3BCC909ULL));
  return (mix64(k + mix64(input)) >> 63) != 0;
}

QuantumState sample_haar_state(int n, Rng& rng) {
  check_state_qubits(n);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index d = Eigen::Index{1} << n;
  Vector v(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = cplx(re, im);
  }
  return QuantumState::normalized(std::move(v));
}

QuantumState sample_haar_state(int n, const Seed& seed) {
  Rng rng = make_rng(seed);
  return sample_haar_state(n, rng);
}

UnitaryMatrix sample_haar_unitary(int n, Rng& rng) {
  check_matrix_qubits(n);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix z(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = cplx(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& rmat = qr.matrixQR();
  for (Eigen::Index k = 0; k < d; ++k) {
    const cplx r = rmat(k, k);
    q.col(k) *= r / std::abs(r);
  }
  return UnitaryMatrix::from_matrix(std::move(q));
}

UnitaryMatrix sample_haar_unitary(int n, const Seed& seed) {
  Rng rng = make_rng(seed);
  return sample_haar_unitary(n, rng);
}

UnitaryMatrix sample_haar_orthogonal(int n, Rng& rng) {
  check_matrix_qubits(n);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::MatrixXd z(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) z(r, c) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ();
  for (Eigen::Index k = 0; k < d; ++k) {
    if (qr.matrixQR()(k, k) < 0.0) q.col(k) = -q.col(k);
  }
  return UnitaryMatrix::from_matrix(q.cast<cplx>());
}

UnitaryMatrix sample_diagonal_unitary(int n, Rng& rng) {
  check_matrix_qubits(n);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) m(k, k) = std::polar(1.0, angle(rng));
  return UnitaryMatrix::from_matrix(std::move(m));
}

QuantumState build_subset_phase_state(const SubsetPhaseSpec& spec) {
  spec.validate();
  const Eigen::Index d = Eigen::Index{1} << spec.n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(spec.K()));
  Vector v = Vector::Zero(d);
  for (std::size_t i = 0; i < spec.K(); ++i) {
    v(static_cast<Eigen::Index>(spec.support[i])) = spec.signs[i] ? -amp : amp;
  }
  return QuantumState::normalized(std::move(v));
}

SubsetPhaseSpec sample_subset_phase(int n, std::size_t K, Rng& rng) {
  check_state_qubits(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (K < 1 || K > dim) {
    throw std::invalid_argument("sample_subset_phase: K must lie in [1, 2^n]");
  }
  // Floyd: one draw per element, no enumeration of the 2^n strings.
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = dim - K; j < dim; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(0, j);
    const std::uint64_t t = pick(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  const Seed key{rng(), rng()};
  SubsetPhaseSpec spec;
  spec.n = n;
  spec.support.assign(chosen.begin(), chosen.end());
  spec.signs.reserve(K);
  for (std::uint64_t x : spec.support) spec.signs.push_back(keyed_bit(key, x) ? 1 : 0);
  return spec;
}

SubsetPhaseSpec sample_subset_phase(int n, std::size_t K, const Seed& seed) {
  Rng rng = make_rng(seed);
  return sample_subset_phase(n, K, rng);
}

// ---------------------------------------------------------------------------
// Stabilizer circuits

QuantumState StabilizerCircuit::prepare() const {
  Vector v = QuantumState::zero(n).amplitudes();
  const Matrix h = gates::H().matrix();
  const Matrix s = gates::S().matrix();
  const Matrix cx = gates::CNOT().matrix();
  for (const CliffordGate& g : gates) {
    switch (g.kind) {
      case CliffordKind::H: {
        const int t[] = {g.target};
        kernel::apply_matrix(v, n, h, t);
        break;
      }
      case CliffordKind::S: {
        const int t[] = {g.target};
        kernel::apply_matrix(v, n, s, t);
        break;
      }
      case CliffordKind::CNOT: {
        const int t[] = {g.control, g.target};
        kernel::apply_matrix(v, n, cx, t);
        break;
      }
    }
  }
  return QuantumState::normalized(std::move(v));
}

std::pair<StabilizerCircuit, QuantumState> sample_stabilizer_state(int n, int depth, Rng& rng) {
  check_state_qubits(n);
  if (depth < 0) throw std::invalid_argument("sample_stabilizer_state: depth must be >= 0");
  StabilizerCircuit circuit;
  circuit.n = n;
  const int kinds = n >= 2 ? 3 : 2;
  std::uniform_int_distribution<int> pick_kind(0, kinds - 1);
  std::uniform_int_distribution<int> pick_qubit(0, n - 1);
  const long count = static_cast<long>(depth) * n * n;
  for (long i = 0; i < count; ++i) {
    const int kind = pick_kind(rng);
    CliffordGate g{static_cast<CliffordKind>(kind), pick_qubit(rng)};
    if (g.kind == CliffordKind::CNOT) {
      std::uniform_int_distribution<int> pick_other(0, n - 2);
      const int c = pick_other(rng);
      g.control = c >= g.target ? c + 1 : c;
    }
    circuit.gates.push_back(g);
  }
  QuantumState state = circuit.prepare();
  return {std::move(circuit), std::move(state)};
}

std::pair<StabilizerCircuit, QuantumState> sample_stabilizer_state(int n, int depth,
                                                                   const Seed& seed) {
  Rng rng = make_rng(seed);
  return sample_stabilizer_state(n, depth, rng);
}

// ---------------------------------------------------------------------------

DensityMatrix depolarize(const DensityMatrix& rho, int qubit, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarize: p must lie in [0, 1]");
  const int n = rho.num_qubits();
  if (qubit < 0 || qubit >= n) throw std::out_of_range("depolarize: qubit out of range");
  const std::uint64_t bit = std::uint64_t{1} << kernel::bit_of(n, qubit);
  const Matrix& m = rho.matrix();
  Matrix out = (1.0 - p) * m;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const auto ru = static_cast<std::uint64_t>(r);
      const auto cu = static_cast<std::uint64_t>(c);
      if ((ru ^ cu) & bit) continue;
      const auto r0 = static_cast<Eigen::Index>(ru & ~bit), c0 = static_cast<Eigen::Index>(cu & ~bit);
      const auto r1 = static_cast<Eigen::Index>(ru | bit), c1 = static_cast<Eigen::Index>(cu | bit);
      out(r, c) += 0.5 * p * (m(r0, c0) + m(r1, c1));
    }
  }
  return DensityMatrix::from_matrix(std::move(out));
}

}  // namespace psr
