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

#include <boost/math/distributions/chi_squared.hpp>
#include <bit>
#include <cmath>
#include <vector>

#include "psr/ensembles.h"
#include "psr/measures.h"
#include "psr/stats.h"

namespace psr {
namespace {

double max_amplitude(const QuantumState& s) { return s.amplitudes().cwiseAbs().maxCoeff(); }

TEST(HaarState, NormAndImaginarityMean) {
  Rng rng = make_rng(Seed{10, 0});
  std::vector<double> imag;
  for (int i = 0; i < 10000; ++i) {
    const QuantumState s = sample_haar_state(3, rng);
    ASSERT_NEAR(s.amplitudes().norm(), 1.0, 1e-10);
    imag.push_back(imaginarity_state(s));
  }
  const MeanStat m = mean_stat(imag);
  EXPECT_NEAR(m.mean, 7.0 / 9.0, 3.0 * m.standard_error);
}

TEST(HaarState, OverlapMeanIsOneOverD) {
  Rng rng = make_rng(Seed{11, 0});
  std::vector<double> ov;
  for (int i = 0; i < 10000; ++i) ov.push_back(fidelity(sample_haar_state(2, rng), sample_haar_state(2, rng)));
  const MeanStat m = mean_stat(ov);
  EXPECT_NEAR(m.mean, 0.25, 3.0 * m.standard_error);
}

TEST(HaarState, BasisCovariant) {
  Rng rng = make_rng(Seed{12, 0});
  const UnitaryMatrix v = sample_haar_unitary(2, rng);
  const int t[] = {0, 1};
  std::vector<double> a, b;
  for (int i = 0; i < 2000; ++i) {
    a.push_back(max_amplitude(sample_haar_state(2, rng)));
    b.push_back(max_amplitude(apply_unitary(v, sample_haar_state(2, rng), t)));
  }
  EXPECT_LT(ks_statistic(a, b), ks_critical_value(0.01, a.size(), b.size()));
}

TEST(HaarUnitary, UnitarityAndImaginarityMean) {
  Rng rng = make_rng(Seed{13, 0});
  std::vector<double> ip;
  for (int i = 0; i < 10000; ++i) {
    const UnitaryMatrix u = sample_haar_unitary(1, rng);
    ASSERT_NEAR((u.matrix().adjoint() * u.matrix() - Matrix::Identity(2, 2)).norm(), 0.0, 1e-10);
    ip.push_back(imaginarity_unitary(u));
  }
  const MeanStat m = mean_stat(ip);
  EXPECT_NEAR(m.mean, 2.0 / 3.0, 3.0 * m.standard_error);
}

TEST(HaarUnitary, FirstColumnIsHaarState) {
  Rng rng = make_rng(Seed{14, 0});
  std::vector<double> a, b;
  for (int i = 0; i < 2000; ++i) {
    const Vector col = sample_haar_unitary(2, rng).matrix().col(0);
    a.push_back(col.cwiseAbs().maxCoeff());
    b.push_back(max_amplitude(sample_haar_state(2, rng)));
  }
  EXPECT_LT(ks_statistic(a, b), ks_critical_value(0.01, a.size(), b.size()));
}

TEST(HaarOrthogonal, RealAndOrthogonal) {
  Rng rng = make_rng(Seed{15, 0});
  for (int n = 1; n <= 3; ++n) {
    const UnitaryMatrix o = sample_haar_orthogonal(n, rng);
    EXPECT_NEAR(o.matrix().imag().norm(), 0.0, 1e-14);
    EXPECT_NEAR(imaginarity_unitary(o), 0.0, 1e-12);
  }
}

TEST(SubsetPhase, Examples) {
  SubsetPhaseSpec one{2, {2}, {0}};
  const QuantumState x = build_subset_phase_state(one);
  EXPECT_NEAR(std::abs(x[2] - 1.0), 0.0, 1e-14);

  Rng rng = make_rng(Seed{16, 0});
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 6;
    const std::size_t K = 1 + static_cast<std::size_t>(i) % (std::size_t{1} << n);
    const SubsetPhaseSpec spec = sample_subset_phase(n, K, rng);
    const QuantumState s = build_subset_phase_state(spec);
    EXPECT_NEAR(rel_entropy_coherence(s), std::log(static_cast<double>(K)), 1e-10);
    EXPECT_NEAR(imaginarity_state(s), 0.0, 1e-12);
    EXPECT_EQ(cardinality(s), K);
  }
  const SubsetPhaseSpec full = sample_subset_phase(3, 8, rng);
  std::vector<std::uint64_t> sorted = full.support;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t k = 0; k < 8; ++k) EXPECT_EQ(sorted[k], k);
}

TEST(SubsetPhase, UniformSubsetsChiSquared) {
  Rng rng = make_rng(Seed{17, 0});
  std::vector<double> counts(16, 0.0);
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    for (std::uint64_t x : sample_subset_phase(4, 4, rng).support) counts[x] += 1.0;
  }
  const double expected = draws * 4.0 / 16.0;
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(15.0);
  EXPECT_LT(chi2, boost::math::quantile(dist, 0.99));
}

TEST(SubsetPhase, DeterministicAndTextRoundTrip) {
  const SubsetPhaseSpec a = sample_subset_phase(5, 7, Seed{3, 4});
  const SubsetPhaseSpec b = sample_subset_phase(5, 7, Seed{3, 4});
  EXPECT_EQ(a.support, b.support);
  EXPECT_EQ(a.signs, b.signs);
  const SubsetPhaseSpec c = SubsetPhaseSpec::from_text(a.to_text());
  EXPECT_EQ(c.support, a.support);
  EXPECT_EQ(c.signs, a.signs);
  EXPECT_THROW((SubsetPhaseSpec{2, {1, 1}, {0, 0}}.validate()), std::invalid_argument);
}

TEST(KeyedBit, BiasAndAvalanche) {
  const Seed k1{99, 1}, k2{99, 2};
  EXPECT_EQ(keyed_bit(k1, 12345), keyed_bit(k1, 12345));
  int ones = 0, differ = 0;
  for (std::uint64_t x = 0; x < 4096; ++x) {
    ones += keyed_bit(k1, x);
    differ += keyed_bit(k1, x) != keyed_bit(k2, x);
  }
  EXPECT_NEAR(ones / 4096.0, 0.5, 0.03);
  EXPECT_NEAR(differ / 4096.0, 0.5, 0.03);
}

TEST(Stabilizer, DepthZeroIsZeroState) {
  Rng rng = make_rng(Seed{18, 0});
  const auto [circ, s] = sample_stabilizer_state(3, 0, rng);
  EXPECT_TRUE(circ.gates.empty());
  EXPECT_NEAR(std::abs(s[0] - 1.0), 0.0, 1e-14);
}

TEST(Stabilizer, PauliExpectationsAndImaginarity) {
  Rng rng = make_rng(Seed{19, 0});
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 4;
    const QuantumState s = sample_stabilizer_state(n, 2, rng).second;
    int nonzero = 0;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << (2 * n)); ++r) {
      const double e = pauli_expectation(s, PauliString::from_index(n, r));
      const double nearest = std::round(e);
      EXPECT_NEAR(e, nearest, 1e-8);
      nonzero += nearest != 0.0;
    }
    EXPECT_EQ(nonzero, 1 << n);
    const double im = imaginarity_state(s);
    EXPECT_TRUE(std::abs(im) < 1e-8 || std::abs(im - 1.0) < 1e-8) << im;
  }
}

TEST(Depolarize, Examples) {
  Rng rng = make_rng(Seed{20, 0});
  const DensityMatrix rho = DensityMatrix::from_state(sample_haar_state(2, rng));
  EXPECT_NEAR((depolarize(rho, 1, 0.0).matrix() - rho.matrix()).norm(), 0.0, 1e-14);
  const DensityMatrix zero = DensityMatrix::from_state(QuantumState::zero(1));
  EXPECT_NEAR((depolarize(zero, 0, 1.0).matrix() - 0.5 * Matrix::Identity(2, 2)).norm(), 0.0, 1e-14);
  for (double p : {0.1, 0.3}) {
    const DensityMatrix z = DensityMatrix::from_state(QuantumState::zero(3));
    EXPECT_NEAR(purity(depolarize(z, 0, p)), 1.0 - p + p * p / 2.0, 1e-12);
  }
  EXPECT_THROW(depolarize(zero, 0, 1.5), std::invalid_argument);
}

}  // namespace
}  // namespace psr
