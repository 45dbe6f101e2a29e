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
#include "psr/moments.h"

namespace psr {
namespace {

const double kR = 1.0 / std::sqrt(2.0);
const double kLn2 = std::log(2.0);

QuantumState state2(cplx a, cplx b) {
  Vector v(2);
  v << a, b;
  return QuantumState::from_amplitudes(v);
}

QuantumState plus_n(int n) { return QuantumState::normalized(Vector::Ones(Eigen::Index{1} << n)); }

const QuantumState kPlusY = state2(kR, cplx(0.0, kR));
const QuantumState kTPlus = state2(kR, std::polar(kR, M_PI / 4.0));
const QuantumState kSPlus = kPlusY;

std::vector<int> all_qubits(int n) {
  std::vector<int> v(n);
  for (int q = 0; q < n; ++q) v[q] = q;
  return v;
}

TEST(Purity, Examples) {
  EXPECT_NEAR(purity(DensityMatrix::from_state(QuantumState::zero(2))), 1.0, 1e-14);
  EXPECT_NEAR(purity(DensityMatrix::maximally_mixed(3)), 1.0 / 8.0, 1e-14);
  const DensityMatrix d = depolarize(DensityMatrix::from_state(QuantumState::zero(1)), 0, 0.1);
  EXPECT_NEAR(purity(d), 0.905, 1e-12);
}

TEST(Imaginarity, Examples) {
  EXPECT_NEAR(imaginarity_state(QuantumState::zero(3)), 0.0, 1e-14);
  EXPECT_NEAR(imaginarity_state(kPlusY), 1.0, 1e-12);
  EXPECT_NEAR(imaginarity_state(kTPlus), 0.5, 1e-12);
}

TEST(Robustness, ExamplesAndConsistency) {
  Rng rng = make_rng(Seed{30, 0});
  const UnitaryMatrix o = sample_haar_orthogonal(2, rng);
  const DensityMatrix real = DensityMatrix::from_state(QuantumState::from_amplitudes(o.matrix().col(0)));
  EXPECT_NEAR(robustness_imaginarity(real), 0.0, 1e-12);
  EXPECT_NEAR(robustness_imaginarity(DensityMatrix::from_state(kPlusY)), 1.0, 1e-12);
  for (int i = 0; i < 50; ++i) {
    const QuantumState psi = sample_haar_state(1 + i % 4, rng);
    const double r = robustness_imaginarity(DensityMatrix::from_state(psi));
    EXPECT_NEAR(r * r, imaginarity_state(psi), 1e-8);
  }
}

TEST(UnitaryImaginarity, Examples) {
  EXPECT_NEAR(imaginarity_unitary(UnitaryMatrix::identity(2)), 0.0, 1e-14);
  EXPECT_NEAR(imaginarity_unitary(gates::H()), 0.0, 1e-14);
  EXPECT_NEAR(imaginarity_unitary(gates::S()), 1.0, 1e-14);
  EXPECT_NEAR(unitary_phi_probability(gates::S()), 0.0, 1e-14);
}

TEST(UnitaryImaginarity, ChoiIdentity) {
  Rng rng = make_rng(Seed{31, 0});
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 3;
    const UnitaryMatrix u = sample_haar_unitary(n, rng);
    const QuantumState choi = apply_unitary(u, maximally_entangled_state(n), all_qubits(n));
    EXPECT_NEAR(imaginarity_unitary(u), imaginarity_state(choi), 1e-8);
  }
}

TEST(Coherence, Examples) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_NEAR(rel_entropy_coherence(QuantumState::basis(n, 1)), 0.0, 1e-14);
    EXPECT_NEAR(rel_entropy_coherence(plus_n(n)), n * kLn2, 1e-12);
    EXPECT_NEAR(hs_coherence(QuantumState::basis(n, 1)), 0.0, 1e-14);
    EXPECT_NEAR(hs_coherence(plus_n(n)), 1.0 - std::ldexp(1.0, -n), 1e-12);
    EXPECT_NEAR(max_rel_entropy_coherence(QuantumState::basis(n, 0)), 0.0, 1e-14);
  }
  Rng rng = make_rng(Seed{32, 0});
  for (std::size_t K : {1, 3, 8, 20}) {
    const QuantumState s = build_subset_phase_state(sample_subset_phase(5, K, rng));
    EXPECT_NEAR(max_rel_entropy_coherence(s), std::log(static_cast<double>(K)), 1e-12);
  }
}

TEST(Coherence, CardinalityOrdering) {
  Rng rng = make_rng(Seed{33, 0});
  for (int i = 0; i < 50; ++i) {
    const QuantumState s = sample_haar_state(1 + i % 5, rng);
    EXPECT_GE(max_rel_entropy_coherence(s), rel_entropy_coherence(s) - 1e-10);
  }
}

TEST(Coherence, HaarMeanHs) {
  Rng rng = make_rng(Seed{34, 0});
  double sum = 0.0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) sum += hs_coherence(sample_haar_state(3, rng));
  // Per-sample standard deviation of C2 at d=8 is below 0.1.
  EXPECT_NEAR(sum / samples, 1.0 - 2.0 / 9.0, 3e-3);
}

TEST(Coherence, Jensen) {
  Rng rng = make_rng(Seed{35, 0});
  for (int i = 0; i < 100; ++i) {
    const QuantumState s = sample_haar_state(1 + i % 5, rng);
    EXPECT_GE(rel_entropy_coherence(s), -std::log(1.0 - hs_coherence(s)) - 1e-10);
  }
}

TEST(Coherence, ZeroIffZero) {
  Rng rng = make_rng(Seed{36, 0});
  std::vector<QuantumState> corpus;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t k = 0; k < (1u << n); ++k) corpus.push_back(QuantumState::basis(n, k));
  for (int i = 0; i < 10; ++i) {
    const int t[] = {0};
    corpus.push_back(apply_unitary(sample_haar_unitary(1, rng), QuantumState::zero(2), t));
  }
  for (const auto& s : corpus) {
    EXPECT_EQ(hs_coherence(s) < 1e-10, rel_entropy_coherence(s) < 1e-10);
  }
}

TEST(Invariances, PhasesAndRealRotations) {
  Rng rng = make_rng(Seed{37, 0});
  const auto t = all_qubits(3);
  for (int i = 0; i < 20; ++i) {
    const QuantumState s = sample_haar_state(3, rng);
    EXPECT_NEAR(rel_entropy_coherence(apply_unitary(sample_diagonal_unitary(3, rng), s, t)),
                rel_entropy_coherence(s), 1e-10);
    EXPECT_NEAR(imaginarity_state(apply_unitary(sample_haar_orthogonal(3, rng), s, t)), imaginarity_state(s),
                1e-10);
  }
}

TEST(Lipschitz, EtaFour) {
  Rng rng = make_rng(Seed{38, 0});
  std::normal_distribution<double> g;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 4;
    const QuantumState a = sample_haar_state(n, rng);
    QuantumState b = sample_haar_state(n, rng);
    if (i % 2) {
      Vector noise(a.dim());
      for (auto& z : noise) z = cplx(g(rng), g(rng));
      b = QuantumState::normalized(a.amplitudes() + 0.01 * noise);
    }
    EXPECT_LE(std::abs(imaginarity_state(a) - imaginarity_state(b)),
              4.0 * (a.amplitudes() - b.amplitudes()).norm() + 1e-12);
  }
}

TEST(CoherencePower, Examples) {
  Rng rng = make_rng(Seed{39, 0});
  EXPECT_NEAR(coherence_power(sample_diagonal_unitary(3, rng)), 0.0, 1e-12);
  for (int n = 1; n <= 3; ++n) {
    const UnitaryMatrix h = gates::on_all(gates::H(), n);
    EXPECT_NEAR(coherence_power(h), n * kLn2, 1e-12);
    EXPECT_NEAR(hs_coherence_power(h), std::ldexp(1.0, -n), 1e-12);
    EXPECT_NEAR(hs_coherence_power(UnitaryMatrix::identity(n)), 1.0, 1e-14);
  }
}

TEST(CoherencePower, RenyiChain) {
  Rng rng = make_rng(Seed{40, 0});
  for (int i = 0; i < 50; ++i) {
    const UnitaryMatrix u = sample_haar_unitary(1 + i % 3, rng);
    const double cp = coherence_power(u);
    EXPECT_GE(coherence_power_max(u), cp - 1e-10);
    EXPECT_GE(cp, coherence_power_collision(u) - 1e-10);
  }
}

TEST(CoherencePower, HaarMean) {
  Rng rng = make_rng(Seed{41, 0});
  double sum = 0.0;
  for (int i = 0; i < 4000; ++i) sum += hs_coherence_power(sample_haar_unitary(2, rng));
  EXPECT_NEAR(sum / 4000, haar_analytics("coherence_power_4th", 4), 0.01);
}

TEST(StabilizerImaginarity, Examples) {
  EXPECT_NEAR(stabilizer_imaginarity(QuantumState::zero(2)), 0.0, 1e-12);
  EXPECT_NEAR(stabilizer_imaginarity(kSPlus), 1.0, 1e-12);
  EXPECT_NEAR(stabilizer_imaginarity(kTPlus), 0.5, 1e-12);
}

TEST(BellDistribution, Completeness) {
  const auto p = bell_distribution(QuantumState::zero(1));
  EXPECT_NEAR(p[0], 0.5, 1e-12);  // I
  EXPECT_NEAR(p[1], 0.0, 1e-12);  // X
  EXPECT_NEAR(p[2], 0.5, 1e-12);  // Z
  EXPECT_NEAR(p[3], 0.0, 1e-12);  // Y
  Rng rng = make_rng(Seed{42, 0});
  for (int n = 1; n <= 4; ++n) {
    const auto q = bell_distribution(sample_haar_state(n, rng));
    double s = 0.0;
    for (double x : q) s += x;
    EXPECT_NEAR(s, 1.0, 1e-10);
  }
}

TEST(Dispatch, NamesEvaluate) {
  Rng rng = make_rng(Seed{43, 0});
  const QuantumState s = sample_haar_state(2, rng);
  for (const auto& name : state_measure_names()) EXPECT_EQ(evaluate_state_measure(name, s).name, name);
  const UnitaryMatrix u = sample_haar_unitary(2, rng);
  for (const auto& name : unitary_measure_names()) EXPECT_EQ(evaluate_unitary_measure(name, u).name, name);
  EXPECT_THROW(evaluate_state_measure("nope", s), std::invalid_argument);
}

}  // namespace
}  // namespace psr
