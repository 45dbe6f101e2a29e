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

#include "psr/qcore.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace psr {

namespace {

void check_qubit_count(int n, int cap, const char* what) {
  if (n < 0 || n > cap) {
    throw std::invalid_argument(std::string(what) + ": qubit count " + std::to_string(n) +
                                " outside [0, " + std::to_string(cap) + "]");
  }
}

void check_targets(int n, std::span<const int> targets) {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int q : targets) {
    if (q < 0 || q >= n) {
      throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                              std::to_string(n) + " qubits");
    }
    if (seen[static_cast<std::size_t>(q)]++) {
      throw std::invalid_argument("duplicate qubit index " + std::to_string(q));
    }
  }
}

// offsets[l] is the global-index contribution of local index l over `targets`.
std::vector<std::uint64_t> target_offsets(int n, std::span<const int> targets) {
  const std::size_t k = targets.size();
  std::vector<std::uint64_t> offsets(std::size_t{1} << k, 0);
  for (std::size_t l = 0; l < offsets.size(); ++l) {
    std::uint64_t off = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((l >> (k - 1 - j)) & 1U) off |= std::uint64_t{1} << kernel::bit_of(n, targets[j]);
    }
    offsets[l] = off;
  }
  return offsets;
}

std::uint64_t mask_of(int n, std::span<const int> qubits) {
  std::uint64_t m = 0;
  for (int q : qubits) m |= std::uint64_t{1} << kernel::bit_of(n, q);
  return m;
}

}  // namespace

int qubits_for_dim(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(dim);
}

// ---------------------------------------------------------------------------
// QuantumState

QuantumState QuantumState::from_amplitudes(Vector amps) {
  const int n = qubits_for_dim(static_cast<std::size_t>(amps.size()));
  check_qubit_count(n, kMaxStateQubits, "QuantumState");
  const double norm = amps.norm();
  if (std::abs(norm - 1.0) > kStructuralTol) {
    throw std::invalid_argument("QuantumState: norm " + std::to_string(norm) + " is not 1");
  }
  return QuantumState(n, std::move(amps));
}

QuantumState QuantumState::normalized(Vector amps) {
  const double norm = amps.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("QuantumState: cannot normalize a zero vector");
  }
  amps /= norm;
  return from_amplitudes(std::move(amps));
}

QuantumState QuantumState::basis(int n, std::uint64_t index) {
  check_qubit_count(n, kMaxStateQubits, "QuantumState");
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (index >= dim) throw std::out_of_range("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return QuantumState(n, std::move(v));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix DensityMatrix::from_matrix(Matrix mat) {
  if (mat.rows() != mat.cols()) throw std::invalid_argument("DensityMatrix: not square");
  const int n = qubits_for_dim(static_cast<std::size_t>(mat.rows()));
  check_qubit_count(n, kMaxMatrixQubits, "DensityMatrix");
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > kStructuralTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  const cplx tr = mat.trace();
  if (std::abs(tr - cplx(1.0, 0.0)) > kStructuralTol) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kStructuralTol) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
  return DensityMatrix(n, std::move(mat));
}

DensityMatrix DensityMatrix::from_state(const QuantumState& s) {
  check_qubit_count(s.num_qubits(), kMaxMatrixQubits, "DensityMatrix");
  Matrix m = s.amplitudes() * s.amplitudes().adjoint();
  return DensityMatrix(s.num_qubits(), std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  check_qubit_count(n, kMaxMatrixQubits, "DensityMatrix");
  const Eigen::Index d = Eigen::Index{1} << n;
  return DensityMatrix(n, Matrix::Identity(d, d) / static_cast<double>(d));
}

// ---------------------------------------------------------------------------
// UnitaryMatrix

UnitaryMatrix UnitaryMatrix::from_matrix(Matrix mat) {
  if (mat.rows() != mat.cols()) throw std::invalid_argument("UnitaryMatrix: not square");
  const int n = qubits_for_dim(static_cast<std::size_t>(mat.rows()));
  check_qubit_count(n, kMaxMatrixQubits, "UnitaryMatrix");
  const Matrix err = mat.adjoint() * mat - Matrix::Identity(mat.rows(), mat.cols());
  if (err.cwiseAbs().maxCoeff() > kStructuralTol) {
    throw std::invalid_argument("UnitaryMatrix: U^dag U differs from I");
  }
  return UnitaryMatrix(n, std::move(mat));
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
  check_qubit_count(n, kMaxMatrixQubits, "UnitaryMatrix");
  const Eigen::Index d = Eigen::Index{1} << n;
  return UnitaryMatrix(n, Matrix::Identity(d, d));
}

// ---------------------------------------------------------------------------
// PauliString

PauliString PauliString::from_index(int n, std::uint64_t r) {
  if (n < 1 || n > 31) throw std::invalid_argument("PauliString: qubit count out of range");
  if (r >> (2 * n)) throw std::out_of_range("PauliString: label exceeds 2n bits");
  std::uint64_t x = 0, z = 0;
  for (int j = 0; j < n; ++j) {
    const unsigned code = static_cast<unsigned>((r >> (2 * (n - 1 - j))) & 3U);
    const std::uint64_t bit = std::uint64_t{1} << kernel::bit_of(n, j);
    if (code & 1U) x |= bit;
    if (code & 2U) z |= bit;
  }
  return PauliString(n, x, z);
}

PauliString PauliString::from_label(const std::string& label) {
  const int n = static_cast<int>(label.size());
  std::uint64_t r = 0;
  for (char c : label) {
    unsigned code = 0;
    switch (c) {
      case 'I': code = 0; break;
      case 'X': code = 1; break;
      case 'Z': code = 2; break;
      case 'Y': code = 3; break;
      default: throw std::invalid_argument(std::string("PauliString: bad label character ") + c);
    }
    r = (r << 2) | code;
  }
  return from_index(n, r);
}

std::uint64_t PauliString::index() const {
  std::uint64_t r = 0;
  for (int j = 0; j < n_; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << kernel::bit_of(n_, j);
    const unsigned code = ((x_mask_ & bit) ? 1U : 0U) | ((z_mask_ & bit) ? 2U : 0U);
    r = (r << 2) | code;
  }
  return r;
}

std::string PauliString::label() const {
  static constexpr char kNames[4] = {'I', 'X', 'Z', 'Y'};
  std::string out;
  const std::uint64_t r = index();
  for (int j = 0; j < n_; ++j) out.push_back(kNames[(r >> (2 * (n_ - 1 - j))) & 3U]);
  return out;
}

std::string PauliString::bits() const {
  std::string out;
  const std::uint64_t r = index();
  for (int b = 2 * n_ - 1; b >= 0; --b) out.push_back(((r >> b) & 1U) ? '1' : '0');
  return out;
}

// sigma|k> = i^{#Y} (-1)^{|k & z|} |k ^ x>
Vector PauliString::apply(const Vector& v) const {
  if (v.size() != (Eigen::Index{1} << n_)) throw std::invalid_argument("PauliString: size mismatch");
  static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx phase = kIPow[std::popcount(x_mask_ & z_mask_) & 3];
  Vector out(v.size());
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(v.size()); ++k) {
    const double sign = (std::popcount(k & z_mask_) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(k ^ x_mask_)) = phase * sign * v(static_cast<Eigen::Index>(k));
  }
  return out;
}

Matrix PauliString::matrix() const {
  const Eigen::Index d = Eigen::Index{1} << n_;
  Matrix m(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    Vector e = Vector::Zero(d);
    e(c) = 1.0;
    m.col(c) = apply(e);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Free functions

QuantumState conjugate_state(const QuantumState& s) {
  return QuantumState::from_amplitudes(s.amplitudes().conjugate());
}

cplx inner_product(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  return std::norm(inner_product(a, b));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  return QuantumState::from_amplitudes(kron(a.amplitudes(), b.amplitudes()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_matrix(kron(a.matrix(), b.matrix()));
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  return UnitaryMatrix::from_matrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  check_targets(n, keep);
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  const auto keep_off = target_offsets(n, kept);
  const auto trace_off = target_offsets(n, traced);
  const Eigen::Index dk = static_cast<Eigen::Index>(keep_off.size());
  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      cplx acc = 0.0;
      for (std::uint64_t t : trace_off) {
        acc += m(static_cast<Eigen::Index>(keep_off[static_cast<std::size_t>(i)] | t),
                 static_cast<Eigen::Index>(keep_off[static_cast<std::size_t>(j)] | t));
      }
      out(i, j) = acc;
    }
  }
  // Restore exact hermiticity lost to summation order.
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix::from_matrix(std::move(out));
}

double trace_norm(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace_norm: matrix is not square");
  if (a.size() == 0) return 0.0;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

QuantumState maximally_entangled_state(int n) {
  if (n < 1) throw std::invalid_argument("maximally_entangled_state: n must be >= 1");
  check_qubit_count(2 * n, kMaxStateQubits, "maximally_entangled_state");
  const Eigen::Index d = Eigen::Index{1} << n;
  Vector v = Vector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index k = 0; k < d; ++k) v(k * d + k) = amp;
  return QuantumState::from_amplitudes(std::move(v));
}

QuantumState apply_unitary(const UnitaryMatrix& u, const QuantumState& s,
                           std::span<const int> targets) {
  if (static_cast<int>(targets.size()) != u.num_qubits()) {
    throw std::invalid_argument("apply_unitary: target count does not match the gate size");
  }
  Vector v = s.amplitudes();
  kernel::apply_matrix(v, s.num_qubits(), u.matrix(), targets);
  return QuantumState::from_amplitudes(std::move(v));
}

DensityMatrix apply_unitary(const UnitaryMatrix& u, const DensityMatrix& rho,
                            std::span<const int> targets) {
  if (static_cast<int>(targets.size()) != u.num_qubits()) {
    throw std::invalid_argument("apply_unitary: target count does not match the gate size");
  }
  Matrix m = rho.matrix();
  kernel::conjugate_matrix(m, rho.num_qubits(), u.matrix(), targets);
  m = (0.5 * (m + m.adjoint())).eval();
  return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix dephase(const DensityMatrix& rho, std::span<const int> targets) {
  check_targets(rho.num_qubits(), targets);
  const std::uint64_t mask = mask_of(rho.num_qubits(), targets);
  Matrix m = rho.matrix();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if ((static_cast<std::uint64_t>(r) ^ static_cast<std::uint64_t>(c)) & mask) m(r, c) = 0.0;
    }
  }
  return DensityMatrix::from_matrix(std::move(m));
}

cplx pauli_overlap(const QuantumState& a, const PauliString& sigma, const QuantumState& b) {
  if (a.num_qubits() != sigma.num_qubits() || b.num_qubits() != sigma.num_qubits()) {
    throw std::invalid_argument("pauli_overlap: qubit count mismatch");
  }
  return a.amplitudes().dot(sigma.apply(b.amplitudes()));
}

double pauli_expectation(const QuantumState& psi, const PauliString& sigma) {
  return pauli_overlap(psi, sigma, psi).real();
}

// ---------------------------------------------------------------------------
// Kernels

namespace kernel {

void apply_matrix(Eigen::Ref<Vector> v, int n, const Matrix& op, std::span<const int> targets) {
  check_targets(n, targets);
  const auto offsets = target_offsets(n, targets);
  const Eigen::Index k = static_cast<Eigen::Index>(offsets.size());
  if (op.rows() != k || op.cols() != k) {
    throw std::invalid_argument("apply_matrix: operator size does not match targets");
  }
  if (v.size() != (Eigen::Index{1} << n)) throw std::invalid_argument("apply_matrix: vector size");
  const std::uint64_t tmask = mask_of(n, targets);
  Vector local(k);
  Vector result(k);
  for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(v.size()); ++base) {
    if (base & tmask) continue;
    for (Eigen::Index l = 0; l < k; ++l) {
      local(l) = v(static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(l)]));
    }
    result.noalias() = op * local;
    for (Eigen::Index l = 0; l < k; ++l) {
      v(static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(l)])) = result(l);
    }
  }
}

void conjugate_matrix(Matrix& rho, int n, const Matrix& op, std::span<const int> targets) {
  for (Eigen::Index c = 0; c < rho.cols(); ++c) apply_matrix(rho.col(c), n, op, targets);
  rho.adjointInPlace();
  for (Eigen::Index c = 0; c < rho.cols(); ++c) apply_matrix(rho.col(c), n, op, targets);
  rho.adjointInPlace();
}

}  // namespace kernel

// ---------------------------------------------------------------------------
// Gates

namespace gates {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

UnitaryMatrix H() {
  Matrix m = Matrix::Constant(2, 2, kInvSqrt2);
  m(1, 1) = -kInvSqrt2;
  return UnitaryMatrix::from_matrix(std::move(m));
}

UnitaryMatrix S() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = cplx(0.0, 1.0);
  return UnitaryMatrix::from_matrix(m);
}

UnitaryMatrix T() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = std::polar(1.0, M_PI / 4.0);
  return UnitaryMatrix::from_matrix(m);
}

UnitaryMatrix X() { return UnitaryMatrix::from_matrix(PauliString::from_label("X").matrix()); }
UnitaryMatrix Y() { return UnitaryMatrix::from_matrix(PauliString::from_label("Y").matrix()); }
UnitaryMatrix Z() { return UnitaryMatrix::from_matrix(PauliString::from_label("Z").matrix()); }

UnitaryMatrix CNOT() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return UnitaryMatrix::from_matrix(m);
}

UnitaryMatrix CSWAP() {
  Matrix m = Matrix::Identity(8, 8);
  m(5, 5) = m(6, 6) = 0.0;
  m(5, 6) = m(6, 5) = 1.0;
  return UnitaryMatrix::from_matrix(m);
}

UnitaryMatrix on_all(const UnitaryMatrix& g, int n) {
  if (g.num_qubits() != 1) throw std::invalid_argument("on_all: expects a single-qubit gate");
  Matrix m = Matrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) m = kron(m, g.matrix());
  return UnitaryMatrix::from_matrix(std::move(m));
}

}  // namespace gates

}  // namespace psr
