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

#include "psr/ensembles.h"
#include "psr/measures.h"
#include "psr/moments.h"
#include "psr/protocols.h"
#include "psr/stats.h"

namespace psr {
namespace {

const double kR = 1.0 / std::sqrt(2.0);

QuantumState state2(cplx a, cplx b) {
  Vector v(2);
  v << a, b;
  return QuantumState::from_amplitudes(v);
}

QuantumState plus_n(int n) { return QuantumState::normalized(Vector::Ones(Eigen::Index{1} << n)); }

TEST(Hoeffding, Budgets) {
  EXPECT_EQ(hoeffding_budget(0.1, 0.05, 1.0), 185u);
  EXPECT_EQ(hoeffding_budget(1.0, 0.05, 1.0), 2u);
  EXPECT_EQ(hoeffding_budget(2.0, 0.05, 2.0), 2u);
  const double m1 = static_cast<double>(hoeffding_budget(0.01, 0.05, 1.0));
  const double m2 = static_cast<double>(hoeffding_budget(0.02, 0.05, 1.0));
  EXPECT_NEAR(m1 / m2, 4.0, 0.01);
  EXPECT_THROW(hoeffding_budget(0.0, 0.05, 1.0), std::invalid_argument);
}

TEST(SwapTest, ExactProbabilities) {
  Rng rng = make_rng(Seed{50, 0});
  const DensityMatrix pure = DensityMatrix::from_state(sample_haar_state(2, rng));
  EXPECT_NEAR(swap_test_probability(pure, pure), 1.0, 1e-12);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
  EXPECT_NEAR(swap_test_probability(mixed, mixed), 0.75, 1e-12);
  const DensityMatrix dep = depolarize(DensityMatrix::from_state(QuantumState::zero(1)), 0, 0.1);
  EXPECT_NEAR(swap_test_probability(dep, dep), 0.9525, 1e-12);
}

TEST(SwapTest, EstimatorUnbiased) {
  const DensityMatrix dep = depolarize(DensityMatrix::from_state(QuantumState::zero(1)), 0, 0.1);
  std::vector<double> est;
  for (std::uint64_t i = 0; i < 200; ++i) est.push_back(swap_test(dep, dep, ShotBudget{200}, child_seed(Seed{51}, i)).estimate);
  const MeanStat m = mean_stat(est);
  EXPECT_NEAR(m.mean, 0.905, 3.0 * m.standard_error);
}

TEST(SwapTest, HoeffdingCoverage) {
  const double delta = 0.1, nu = 0.05;
  const std::uint64_t M = hoeffding_budget(delta, nu, 2.0);
  const DensityMatrix dep = depolarize(DensityMatrix::from_state(QuantumState::zero(2)), 1, 0.3);
  int bad = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const EstimateReport r = swap_test(dep, dep, ShotBudget{M}, child_seed(Seed{52}, i));
    bad += std::abs(r.estimate - purity(dep)) > delta;
  }
  EXPECT_LE(bad / 200.0, nu);
}

TEST(BellSampling, ExamplesAndFidelity) {
  const auto p = bell_outcome_distribution(QuantumState::zero(1));
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[2], 0.5, 1e-12);
  EXPECT_NEAR(p[1] + p[3], 0.0, 1e-12);
  Rng rng = make_rng(Seed{53, 0});
  const QuantumState s = sample_haar_state(2, rng);
  const auto circuit = bell_outcome_distribution(s);
  const auto closed = bell_distribution(s);
  for (std::size_t k = 0; k < closed.size(); ++k) EXPECT_NEAR(circuit[k], closed[k], 1e-10);
  const BellSampleReport rep = bell_sample(s, ShotBudget{100000}, Seed{54});
  EXPECT_LE(rep.total_variation(), 0.02);
}

TEST(BellSampling, StabilizerSupportUniform) {
  Rng rng = make_rng(Seed{55, 0});
  for (int i = 0; i < 12; ++i) {
    const int n = 1 + i % 3;
    const auto p = bell_outcome_distribution(sample_stabilizer_state(n, 2, rng).second);
    int support = 0;
    for (double x : p) {
      if (x > 1e-10) {
        ++support;
        EXPECT_NEAR(x, std::ldexp(1.0, -n), 1e-10);
      }
    }
    EXPECT_EQ(support, 1 << n);
  }
}

TEST(Algorithm1, Examples) {
  const std::uint64_t M = hoeffding_budget(0.05, 0.05, 2.0);
  const EstimateReport z = alg1_stabilizer_imaginarity(QuantumState::zero(2), M, Seed{56});
  EXPECT_NEAR(z.estimate, 0.0, 1e-12);
  EXPECT_EQ(z.copies, 4 * M);
  const EstimateReport s = alg1_stabilizer_imaginarity(state2(kR, cplx(0.0, kR)), M, Seed{57});
  EXPECT_NEAR(s.estimate, 1.0, 0.05);
  const EstimateReport t = alg1_stabilizer_imaginarity(state2(kR, std::polar(kR, M_PI / 4.0)), M, Seed{58});
  EXPECT_NEAR(t.estimate, 0.5, 0.05);
}

TEST(Algorithm1, Unbiased) {
  const QuantumState t = state2(kR, std::polar(kR, M_PI / 4.0));
  std::vector<double> est;
  for (std::uint64_t i = 0; i < 200; ++i) est.push_back(alg1_stabilizer_imaginarity(t, 100, child_seed(Seed{59}, i)).estimate);
  const MeanStat m = mean_stat(est);
  EXPECT_NEAR(m.mean, 0.5, 3.0 * m.standard_error);
}

TEST(UnitaryImaginarity, ProbabilityAndEstimates) {
  EXPECT_NEAR(unitary_phi_probability_circuit(UnitaryMatrix::identity(1)), 1.0, 1e-12);
  EXPECT_NEAR(unitary_phi_probability_circuit(gates::S()), 0.0, 1e-12);
  EXPECT_NEAR(estimate_unitary_imaginarity(UnitaryMatrix::identity(2), ShotBudget{500}, Seed{60}).estimate, 0.0, 1e-12);
  EXPECT_NEAR(estimate_unitary_imaginarity(gates::S(), ShotBudget{500}, Seed{61}).estimate, 1.0, 1e-12);
  Rng rng = make_rng(Seed{62, 0});
  double sum = 0.0;
  for (int i = 0; i < 4000; ++i) sum += unitary_phi_probability_circuit(sample_haar_unitary(1, rng));
  EXPECT_NEAR(sum / 4000, 2.0 / (2.0 * 3.0), 0.02);
  std::vector<double> est;
  const UnitaryMatrix u = sample_haar_unitary(2, rng);
  for (std::uint64_t i = 0; i < 200; ++i) est.push_back(estimate_unitary_imaginarity(u, ShotBudget{100}, child_seed(Seed{63}, i)).estimate);
  const MeanStat m = mean_stat(est);
  EXPECT_NEAR(m.mean, imaginarity_unitary(u), 3.0 * m.standard_error);
}

TEST(InefficientImaginarity, Examples) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_NEAR(inefficient_imaginarity_probability(plus_n(n)), std::ldexp(1.0, -n), 1e-12);
    EXPECT_NEAR(estimate_state_imaginarity_inefficient(plus_n(n), ShotBudget{20000}, Seed{64}).estimate, 0.0,
                0.1 * (1 << n));
  }
  const QuantumState py = state2(kR, cplx(0.0, kR));
  EXPECT_NEAR(inefficient_imaginarity_probability(py), 0.0, 1e-12);
  EXPECT_NEAR(estimate_state_imaginarity_inefficient(py, ShotBudget{100}, Seed{65}).estimate, 1.0, 1e-12);
}

TEST(InefficientImaginarity, CostScalesWithDimension) {
  std::vector<double> per_dim;
  for (int n : {2, 4, 6}) {
    const EstimateReport r = estimate_state_imaginarity_inefficient(plus_n(n), ShotBudget{100000}, Seed{66});
    per_dim.push_back(r.sample_variance / 0.01 / std::ldexp(1.0, n));
  }
  const auto [lo, hi] = std::minmax_element(per_dim.begin(), per_dim.end());
  EXPECT_LE(*hi / *lo, 1.5);
}

TEST(HsCoherence, ProbabilityAndEstimates) {
  EXPECT_NEAR(hs_coherence_probability(QuantumState::zero(1)), 1.0, 1e-12);
  EXPECT_NEAR(estimate_hs_coherence(QuantumState::zero(3), ShotBudget{100}, Seed{67}).estimate, 0.0, 1e-12);
  for (int n = 1; n <= 7; ++n) EXPECT_NEAR(hs_coherence_probability(plus_n(n)), std::ldexp(1.0, -n), 1e-12);
  Rng rng = make_rng(Seed{68, 0});
  double sum = 0.0;
  for (int i = 0; i < 4000; ++i) sum += hs_coherence_probability(sample_haar_state(2, rng));
  EXPECT_NEAR(sum / 4000, 2.0 / 5.0, 0.01);
}

TEST(CoherencePower, ChiExamples) {
  EXPECT_NEAR(swap_test_probability(coherence_power_chi(UnitaryMatrix::identity(1))), 1.0, 1e-12);
  const DensityMatrix chi_h = coherence_power_chi(gates::H());
  EXPECT_NEAR((chi_h.matrix() - 0.25 * Matrix::Identity(4, 4)).norm(), 0.0, 1e-12);
  EXPECT_NEAR(swap_test_probability(chi_h), 0.75, 1e-12);
  Rng rng = make_rng(Seed{69, 0});
  for (int i = 0; i < 20; ++i) {
    const UnitaryMatrix u = sample_haar_unitary(2, rng);
    EXPECT_NEAR(2.0 * swap_test_probability(coherence_power_chi(u)) - 1.0, hs_coherence_power(u), 1e-8);
  }
  std::vector<double> est;
  const UnitaryMatrix u = sample_haar_unitary(2, rng);
  for (std::uint64_t i = 0; i < 200; ++i) est.push_back(estimate_coherence_power(u, ShotBudget{100}, child_seed(Seed{70}, i)).estimate);
  const MeanStat m = mean_stat(est);
  EXPECT_NEAR(m.mean, hs_coherence_power(u), 3.0 * m.standard_error);
}

TEST(Reports, Determinism) {
  const DensityMatrix dm = DensityMatrix::maximally_mixed(2);
  const EstimateReport a = swap_test(dm, dm, ShotBudget{300}, Seed{71, 2});
  const EstimateReport b = swap_test(dm, dm, ShotBudget{300}, Seed{71, 2});
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_EQ(a.copies, 600u);
  EXPECT_THROW(swap_test(dm, dm, ShotBudget{0}, Seed{}), std::invalid_argument);
}

}  // namespace
}  // namespace psr
