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

#ifndef PSR_QCORE_H
#define PSR_QCORE_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

/// Dense complex linear algebra for small qubit registers.
///
/// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
/// computational-basis index. All matrices are column-major complex double.
namespace psr {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kMaxStateQubits = 12;
inline constexpr int kMaxMatrixQubits = 6;

/// Tolerance for structural invariants (norm, hermiticity, unitarity).
inline constexpr double kStructuralTol = 1e-10;
/// Tolerance for derived identities between independently computed values.
inline constexpr double kIdentityTol = 1e-8;

/// Pure state of `n` qubits with unit-norm amplitudes.
class QuantumState {
 public:
  /// Throws std::invalid_argument unless the length is 2^n for some n within
  /// the cap and the norm is 1 within kStructuralTol.
  static QuantumState from_amplitudes(Vector amps);
  /// Rescales a nonzero vector to unit norm.
  static QuantumState normalized(Vector amps);
  static QuantumState basis(int n, std::uint64_t index);
  static QuantumState zero(int n) { return basis(n, 0); }

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  cplx operator[](std::size_t k) const { return amps_(static_cast<Eigen::Index>(k)); }

 private:
  QuantumState(int n, Vector amps) : n_(n), amps_(std::move(amps)) {}
  int n_;
  Vector amps_;
};

/// Hermitian, unit-trace, positive semidefinite operator on `n` qubits.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(Matrix mat);
  static DensityMatrix from_state(const QuantumState& s);
  static DensityMatrix maximally_mixed(int n);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }

 private:
  DensityMatrix(int n, Matrix mat) : n_(n), mat_(std::move(mat)) {}
  int n_;
  Matrix mat_;
};

class UnitaryMatrix {
 public:
  /// Throws std::invalid_argument unless ||U^dag U - I||_max <= kStructuralTol.
  static UnitaryMatrix from_matrix(Matrix mat);
  static UnitaryMatrix identity(int n);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }

 private:
  UnitaryMatrix(int n, Matrix mat) : n_(n), mat_(std::move(mat)) {}
  int n_;
  Matrix mat_;
};

/// Hermitian Pauli string with phase +1.
///
/// The label is a 2n-bit string r_1 r_2 ... r_{2n}; qubit j carries the pair
/// (r_{2j-1}, r_{2j}) with 00 = I, 01 = X, 10 = Z, 11 = Y. As an integer, r_1
/// is the most significant bit.
class PauliString {
 public:
  static PauliString from_index(int n, std::uint64_t r);
  /// Parses "IXZY"-style labels.
  static PauliString from_label(const std::string& label);

  int num_qubits() const { return n_; }
  std::uint64_t index() const;
  /// Basis-index mask of qubits carrying X or Y.
  std::uint64_t x_mask() const { return x_mask_; }
  /// Basis-index mask of qubits carrying Z or Y.
  std::uint64_t z_mask() const { return z_mask_; }
  std::string label() const;
  std::string bits() const;
  Matrix matrix() const;
  /// sigma |v>.
  Vector apply(const Vector& v) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  PauliString(int n, std::uint64_t x, std::uint64_t z) : n_(n), x_mask_(x), z_mask_(z) {}
  int n_;
  std::uint64_t x_mask_;
  std::uint64_t z_mask_;
};

/// Returns the qubit count of a power-of-two dimension, or throws.
int qubits_for_dim(std::size_t dim);

QuantumState conjugate_state(const QuantumState& s);

/// <a|b>.
cplx inner_product(const QuantumState& a, const QuantumState& b);
/// |<a|b>|^2.
double fidelity(const QuantumState& a, const QuantumState& b);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);
QuantumState tensor(const QuantumState& a, const QuantumState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Reduced state on the qubits in `keep`, ordered ascending. Throws
/// std::out_of_range for indices outside [0, n) and std::invalid_argument for
/// duplicates.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Sum of singular values. Hermitian input goes through the eigensolver.
double trace_norm(const Matrix& a);

/// 2^{-n/2} sum_k |k>|k> on 2n qubits.
QuantumState maximally_entangled_state(int n);

QuantumState apply_unitary(const UnitaryMatrix& u, const QuantumState& s,
                           std::span<const int> targets);
DensityMatrix apply_unitary(const UnitaryMatrix& u, const DensityMatrix& rho,
                            std::span<const int> targets);

/// Completely dephases the listed qubits in the computational basis.
DensityMatrix dephase(const DensityMatrix& rho, std::span<const int> targets);

/// <a| sigma |b>.
cplx pauli_overlap(const QuantumState& a, const PauliString& sigma, const QuantumState& b);
/// <psi| sigma |psi>, real for Hermitian sigma.
double pauli_expectation(const QuantumState& psi, const PauliString& sigma);

namespace kernel {

/// In-place v <- (op on targets) v for a 2^n vector. `op` need not be unitary.
void apply_matrix(Eigen::Ref<Vector> v, int n, const Matrix& op, std::span<const int> targets);

/// rho <- (op on targets) rho (op on targets)^dag.
void conjugate_matrix(Matrix& rho, int n, const Matrix& op, std::span<const int> targets);

/// Bit position of qubit q within an n-qubit basis index.
constexpr int bit_of(int n, int q) { return n - 1 - q; }

}  // namespace kernel

namespace gates {

UnitaryMatrix H();
UnitaryMatrix S();
UnitaryMatrix T();
UnitaryMatrix X();
UnitaryMatrix Y();
UnitaryMatrix Z();
/// Control is the first target.
UnitaryMatrix CNOT();
/// Control is the first target; swaps the other two.
UnitaryMatrix CSWAP();
/// The same single-qubit gate on every one of n qubits.
UnitaryMatrix on_all(const UnitaryMatrix& g, int n);

}  // namespace gates

}  // namespace psr

#endif  // PSR_QCORE_H
