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


#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "psr/ensembles.h"
#include "psr/measures.h"
#include "psr/qcore.h"

namespace psr {
namespace {

const double kR = 1.0 / std::sqrt(2.0);
const cplx kI(0.0, 1.0);

QuantumState state2(cplx a, cplx b) {
  Vector v(2);
  v << a, b;
  return QuantumState::from_amplitudes(v);
}

Matrix random_matrix(int d, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = cplx(g(rng), g(rng));
  return m;
}

TEST(QuantumState, RejectsUnnormalized) {
  Vector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(QuantumState::from_amplitudes(v), std::invalid_argument);
  Vector w(3);
  w << 1.0, 0.0, 0.0;
  EXPECT_THROW(QuantumState::from_amplitudes(w), std::invalid_argument);
  EXPECT_NEAR(QuantumState::normalized(v).amplitudes().norm(), 1.0, 1e-12);
}

TEST(Conjugate, Examples) {
  const QuantumState zero = QuantumState::zero(1);
  EXPECT_NEAR((conjugate_state(zero).amplitudes() - zero.amplitudes()).norm(), 0.0, 1e-12);

  const QuantumState py = state2(kR, kI * kR);
  EXPECT_NEAR((conjugate_state(py).amplitudes() - state2(kR, -kI * kR).amplitudes()).norm(), 0.0, 1e-12);

  const cplx w = std::polar(1.0, M_PI / 4.0);
  const QuantumState t = state2(kR, w * kR);
  EXPECT_NEAR((conjugate_state(t).amplitudes() - state2(kR, std::conj(w) * kR).amplitudes()).norm(), 0.0, 1e-12);
  const cplx ov = inner_product(t, conjugate_state(t));
  EXPECT_NEAR(std::abs(ov - cplx(0.5, -0.5)), 0.0, 1e-12);
}

TEST(Conjugate, Involution) {
  Rng rng = make_rng(Seed{1, 0});
  for (int i = 0; i < 20; ++i) {
    const QuantumState psi = sample_haar_state(1 + i % 4, rng);
    EXPECT_NEAR((conjugate_state(conjugate_state(psi)).amplitudes() - psi.amplitudes()).norm(), 0.0, 1e-14);
  }
}

TEST(PartialTrace, Examples) {
  const DensityMatrix phi = DensityMatrix::from_state(maximally_entangled_state(1));
  const int keep0[] = {0};
  EXPECT_NEAR((partial_trace(phi, keep0).matrix() - 0.5 * Matrix::Identity(2, 2)).norm(), 0.0, 1e-12);

  const DensityMatrix prod = DensityMatrix::from_state(QuantumState::basis(2, 1));  // |0>|1>
  Matrix expect = Matrix::Zero(2, 2);
  expect(0, 0) = 1.0;
  EXPECT_NEAR((partial_trace(prod, keep0).matrix() - expect).norm(), 0.0, 1e-12);
}

TEST(PartialTrace, SchmidtSymmetry) {
  Rng rng = make_rng(Seed{2, 0});
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 4;
    const int na = 1 + i % (n - 1);
    const DensityMatrix rho = DensityMatrix::from_state(sample_haar_state(n, rng));
    std::vector<int> a, b;
    for (int q = 0; q < n; ++q) (q < na ? a : b).push_back(q);
    EXPECT_NEAR(purity(partial_trace(rho, a)), purity(partial_trace(rho, b)), 1e-10);
  }
}

TEST(PartialTrace, Composes) {
  Rng rng = make_rng(Seed{3, 0});
  const DensityMatrix rho = DensityMatrix::from_state(sample_haar_state(4, rng));
  const int keep3[] = {0, 2, 3};
  const int keep_then[] = {0, 2};  // qubits 0 and 3 of the original
  const int direct[] = {0, 3};
  const DensityMatrix two_step = partial_trace(partial_trace(rho, keep3), keep_then);
  EXPECT_NEAR((two_step.matrix() - partial_trace(rho, direct).matrix()).norm(), 0.0, 1e-12);
}

TEST(TraceNorm, Examples) {
  EXPECT_NEAR(trace_norm(Matrix::Zero(2, 2)), 0.0, 1e-14);
  EXPECT_NEAR(trace_norm(PauliString::from_label("Y").matrix()), 2.0, 1e-12);
  const DensityMatrix py = DensityMatrix::from_state(state2(kR, kI * kR));
  const Matrix diff = py.matrix() - py.matrix().transpose();
  EXPECT_NEAR((diff - PauliString::from_label("Y").matrix()).norm(), 0.0, 1e-12);
  EXPECT_NEAR(robustness_imaginarity(py), 1.0, 1e-12);
}

TEST(TraceNorm, PureStateDifference) {
  Rng rng = make_rng(Seed{4, 0});
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 3;
    const QuantumState a = sample_haar_state(n, rng), b = sample_haar_state(n, rng);
    const double f = fidelity(a, b);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0 + 1e-12);
    const Matrix d = DensityMatrix::from_state(a).matrix() - DensityMatrix::from_state(b).matrix();
    EXPECT_NEAR(trace_norm(d), 2.0 * std::sqrt(1.0 - f), 1e-8);
  }
}

TEST(MaximallyEntangled, Examples) {
  const QuantumState phi = maximally_entangled_state(1);
  EXPECT_NEAR(std::abs(phi[0] - kR), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(phi[3] - kR), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(phi[1]) + std::abs(phi[2]), 0.0, 1e-12);
  for (int n = 1; n <= 6; ++n) EXPECT_NEAR(maximally_entangled_state(n).amplitudes().norm(), 1.0, 1e-12);
}

TEST(MaximallyEntangled, Ricochet) {
  Rng rng = make_rng(Seed{5, 0});
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 3;
    const int d = 1 << n;
    const Matrix a = random_matrix(d, rng);
    const Vector phi = maximally_entangled_state(n).amplitudes();
    const Vector lhs = kron(a, Matrix::Identity(d, d)) * phi;
    const Vector rhs = kron(Matrix::Identity(d, d), Matrix(a.transpose())) * phi;
    EXPECT_NEAR((lhs - rhs).norm(), 0.0, 1e-10);
  }
}

TEST(ApplyUnitary, Examples) {
  Rng rng = make_rng(Seed{6, 0});
  const int q0[] = {0};
  const QuantumState psi = sample_haar_state(1, rng);
  EXPECT_NEAR((apply_unitary(UnitaryMatrix::identity(1), psi, q0).amplitudes() - psi.amplitudes()).norm(), 0.0, 1e-14);
  const QuantumState plus = apply_unitary(gates::H(), QuantumState::zero(1), q0);
  EXPECT_NEAR(std::abs(plus[0] - kR) + std::abs(plus[1] - kR), 0.0, 1e-12);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 4;
    const UnitaryMatrix u = sample_haar_unitary(n, rng);
    const UnitaryMatrix ud = UnitaryMatrix::from_matrix(u.matrix().adjoint());
    std::vector<int> t(n);
    for (int q = 0; q < n; ++q) t[q] = q;
    const QuantumState s = sample_haar_state(n, rng);
    const QuantumState back = apply_unitary(ud, apply_unitary(u, s, t), t);
    EXPECT_NEAR((back.amplitudes() - s.amplitudes()).norm(), 0.0, 1e-10);
  }
}

TEST(ApplyUnitary, TargetsMatchKron) {
  Rng rng = make_rng(Seed{7, 0});
  const UnitaryMatrix u = sample_haar_unitary(1, rng);
  const QuantumState s = sample_haar_state(3, rng);
  const int q1[] = {1};
  const Matrix full = kron(kron(Matrix::Identity(2, 2), u.matrix()), Matrix::Identity(2, 2));
  EXPECT_NEAR((apply_unitary(u, s, q1).amplitudes() - full * s.amplitudes()).norm(), 0.0, 1e-12);
  // Reversed control/target order on CNOT.
  const int rev[] = {1, 0};
  const QuantumState b = apply_unitary(gates::CNOT(), QuantumState::basis(2, 1), rev);  // |01>, control qubit 1
  EXPECT_NEAR(std::abs(b[3]), 1.0, 1e-12);
}

TEST(PauliString, LabelsAndIndices) {
  EXPECT_EQ(PauliString::from_index(1, 0).label(), "I");
  EXPECT_EQ(PauliString::from_index(1, 1).label(), "X");
  EXPECT_EQ(PauliString::from_index(1, 2).label(), "Z");
  EXPECT_EQ(PauliString::from_index(1, 3).label(), "Y");
  for (std::uint64_t r = 0; r < 64; ++r) {
    const PauliString p = PauliString::from_index(3, r);
    EXPECT_EQ(p.index(), r);
    EXPECT_EQ(PauliString::from_label(p.label()), p);
    const Matrix m = p.matrix();
    EXPECT_NEAR((m * m - Matrix::Identity(8, 8)).norm(), 0.0, 1e-12);
    EXPECT_NEAR((m - m.adjoint()).norm(), 0.0, 1e-12);
  }
  EXPECT_THROW(PauliString::from_label("XQ"), std::invalid_argument);
}

TEST(PauliString, ApplyMatchesMatrix) {
  Rng rng = make_rng(Seed{8, 0});
  const QuantumState s = sample_haar_state(3, rng);
  for (std::uint64_t r = 0; r < 64; ++r) {
    const PauliString p = PauliString::from_index(3, r);
    EXPECT_NEAR((p.apply(s.amplitudes()) - p.matrix() * s.amplitudes()).norm(), 0.0, 1e-12);
  }
}

TEST(Dephase, KillsOffDiagonals) {
  const DensityMatrix plus = DensityMatrix::from_state(QuantumState::normalized(Vector::Ones(2)));
  const int q0[] = {0};
  EXPECT_NEAR((dephase(plus, q0).matrix() - 0.5 * Matrix::Identity(2, 2)).norm(), 0.0, 1e-12);
}

TEST(Caps, Enforced) {
  EXPECT_THROW(QuantumState::zero(kMaxStateQubits + 1), std::invalid_argument);
  EXPECT_THROW(DensityMatrix::maximally_mixed(kMaxMatrixQubits + 1), std::invalid_argument);
}

}  // namespace
}  // namespace psr
