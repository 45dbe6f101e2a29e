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

#include "psr/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "psr/cli.h"
#include "psr/distinguish.h"
#include "psr/ensembles.h"
#include "psr/measures.h"
#include "psr/moments.h"
#include "psr/protocols.h"
#include "psr/rebit.h"
#include "psr/stats.h"

namespace psr {

namespace {

constexpr double kZ95 = 1.959963984540054;

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::vector<int> first_qubits(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

QuantumState subset_state(const SubsetPhaseSpec& spec, const AcceptanceOptions& o) {
  if (!o.inject_normalization_fault) return build_subset_phase_state(spec);
  const double amp = 1.0 / static_cast<double>(spec.K());
  Vector v = Vector::Zero(Eigen::Index{1} << spec.n);
  for (std::size_t i = 0; i < spec.K(); ++i) {
    v(static_cast<Eigen::Index>(spec.support[i])) = spec.signs[i] ? -amp : amp;
  }
  return QuantumState::from_amplitudes(std::move(v));
}

QuantumState plus_state(int n) {
  return QuantumState::normalized(Vector::Ones(Eigen::Index{1} << n));
}

QuantumState gate_on_plus(const UnitaryMatrix& g) {
  const int q[] = {0};
  return apply_unitary(g, plus_state(1), q);
}

struct MeanCheck {
  bool ok = true;
  std::string detail;

  void add(const std::string& label, const MeanStat& m, double expected) {
    const double z = m.standard_error > 0.0 ? (m.mean - expected) / m.standard_error : 0.0;
    const bool pass = std::abs(m.mean - expected) <= 3.0 * m.standard_error + 1e-12;
    ok = ok && pass;
    if (!detail.empty()) detail += "; ";
    detail += label + " mean=" + fmt(m.mean, 5) + " expected=" + fmt(expected, 5) + " z=" + fmt(z, 2);
  }
};

// ---------------------------------------------------------------------------

CheckResult c1_haar_state_imaginarity(const AcceptanceOptions& o) {
  CheckResult r;
  const std::uint64_t samples = o.reduced ? 2000 : 10000;
  MeanCheck mc;
  for (int n = 1; n <= 3; ++n) {
    Rng rng = make_rng(child_seed(o.seed, 100 + static_cast<std::uint64_t>(n)));
    std::vector<double> v;
    for (std::uint64_t s = 0; s < samples; ++s) v.push_back(imaginarity_state(sample_haar_state(n, rng)));
    mc.add("n=" + std::to_string(n), mean_stat(v), haar_analytics("state_imaginarity", std::uint64_t{1} << n));
  }
  r.passed = mc.ok;
  r.detail = std::to_string(samples) + " samples; " + mc.detail;
  return r;
}

CheckResult c2_haar_unitary_imaginarity(const AcceptanceOptions& o) {
  CheckResult r;
  const std::uint64_t samples = o.reduced ? 2000 : 10000;
  MeanCheck mc;
  for (int n = 1; n <= 2; ++n) {
    Rng rng = make_rng(child_seed(o.seed, 200 + static_cast<std::uint64_t>(n)));
    std::vector<double> v;
    for (std::uint64_t s = 0; s < samples; ++s) v.push_back(imaginarity_unitary(sample_haar_unitary(n, rng)));
    mc.add("n=" + std::to_string(n), mean_stat(v),
           haar_analytics("unitary_imaginarity", std::uint64_t{1} << n));
  }
  Rng rng = make_rng(child_seed(o.seed, 210));
  double max_gap = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 3;
    const UnitaryMatrix u = sample_haar_unitary(n, rng);
    const QuantumState choi = apply_unitary(u, maximally_entangled_state(n), first_qubits(n));
    max_gap = std::max(max_gap, std::abs(imaginarity_unitary(u) - imaginarity_state(choi)));
  }
  r.passed = mc.ok && max_gap <= 1e-8;
  r.detail = std::to_string(samples) + " samples; " + mc.detail + "; Choi gap max=" + fmt(max_gap, 3) +
             " over 50 unitaries";
  return r;
}

CheckResult c3_haar_coherence(const AcceptanceOptions& o) {
  CheckResult r;
  const std::uint64_t samples = o.reduced ? 2000 : 10000;
  MeanCheck mc;
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t d = std::uint64_t{1} << n;
    Rng rng = make_rng(child_seed(o.seed, 300 + static_cast<std::uint64_t>(n)));
    std::vector<double> c2, p4;
    for (std::uint64_t s = 0; s < samples; ++s) {
      c2.push_back(hs_coherence(sample_haar_state(n, rng)));
      p4.push_back(hs_coherence_power(sample_haar_unitary(n, rng)));
    }
    mc.add("C2 n=" + std::to_string(n), mean_stat(c2), haar_analytics("hs_coherence", d));
    mc.add("sum|U|^4/d n=" + std::to_string(n), mean_stat(p4), haar_analytics("coherence_power_4th", d));
  }
  r.passed = mc.ok;
  r.detail = std::to_string(samples) + " samples; " + mc.detail;
  return r;
}

CheckResult c4_protocol_exactness(const AcceptanceOptions& o) {
  CheckResult r;
  Rng rng = make_rng(child_seed(o.seed, 400));
  std::vector<QuantumState> states;
  for (int n = 1; n <= 3; ++n) states.push_back(QuantumState::zero(n));
  states.push_back(plus_state(1));
  states.push_back(plus_state(3));
  states.push_back(gate_on_plus(gates::S()));
  states.push_back(gate_on_plus(gates::T()));
  const std::pair<int, std::size_t> subsets[] = {{3, 2}, {3, 4}, {3, 8}, {4, 5}, {5, 3}};
  for (const auto& [n, K] : subsets) states.push_back(subset_state(sample_subset_phase(n, K, rng), o));
  for (int n = 2; n <= 4; ++n) states.push_back(sample_stabilizer_state(n, 2, rng).second);
  for (int i = 0; states.size() < 25; ++i) states.push_back(sample_haar_state(1 + i % 5, rng));

  std::vector<UnitaryMatrix> unitaries = {UnitaryMatrix::identity(1), UnitaryMatrix::identity(2),
                                          gates::H(), gates::S(), gates::T(),
                                          gates::on_all(gates::H(), 2), gates::CNOT(), gates::CSWAP(),
                                          gates::on_all(gates::S(), 2)};
  unitaries.push_back(sample_diagonal_unitary(2, rng));
  unitaries.push_back(sample_haar_orthogonal(2, rng));
  unitaries.push_back(sample_haar_orthogonal(3, rng));
  for (int i = 0; unitaries.size() < 25; ++i) unitaries.push_back(sample_haar_unitary(1 + i % 3, rng));

  double e_swap = 0.0, e_pic = 0.0, e_phi = 0.0, e_ineff = 0.0, e_bell = 0.0, e_cp = 0.0;
  for (const QuantumState& psi : states) {
    const DensityMatrix rho = DensityMatrix::from_state(psi);
    const DensityMatrix sigma = depolarize(rho, 0, 0.3);
    e_swap = std::max(e_swap, std::abs(swap_test_probability(rho, rho) - 0.5 * (1.0 + purity(rho))));
    const double overlap = (rho.matrix() * sigma.matrix()).trace().real();
    e_swap = std::max(e_swap, std::abs(swap_test_probability(rho, sigma) - 0.5 * (1.0 + overlap)));
    e_pic = std::max(e_pic, std::abs(hs_coherence_probability(psi) - (1.0 - hs_coherence(psi))));
    e_ineff = std::max(e_ineff, std::abs(inefficient_imaginarity_probability(psi) -
                                         (1.0 - imaginarity_state(psi)) / static_cast<double>(psi.dim())));
    const auto circuit = bell_outcome_distribution(psi);
    const auto closed = bell_distribution(psi);
    for (std::size_t k = 0; k < circuit.size(); ++k) e_bell = std::max(e_bell, std::abs(circuit[k] - closed[k]));
    e_bell = std::max(e_bell, std::abs(std::accumulate(closed.begin(), closed.end(), 0.0) - 1.0));
  }
  for (const UnitaryMatrix& u : unitaries) {
    e_phi = std::max(e_phi, std::abs(unitary_phi_probability_circuit(u) - unitary_phi_probability(u)));
    e_cp = std::max(e_cp, std::abs(swap_test_probability(coherence_power_chi(u)) -
                                   0.5 * (1.0 + hs_coherence_power(u))));
  }
  const double worst = std::max({e_swap, e_pic, e_phi, e_ineff, e_bell, e_cp});
  r.passed = worst <= 1e-8;
  r.detail = std::to_string(states.size()) + " states + " + std::to_string(unitaries.size()) +
             " unitaries; max error swap=" + fmt(e_swap, 2) + " PiC=" + fmt(e_pic, 2) +
             " PPhi=" + fmt(e_phi, 2) + " coherence-power=" + fmt(e_cp, 2) + " bell=" + fmt(e_bell, 2) +
             " Phi-overlap=" + fmt(e_ineff, 2);
  return r;
}

CheckResult c5_algorithm1(const AcceptanceOptions& o) {
  CheckResult r;
  const double delta = 0.05, nu = 0.05;
  const std::uint64_t M = hoeffding_budget(delta, nu, 2.0);
  const int reps = o.reduced ? 4 : 20;
  Rng rng = make_rng(child_seed(o.seed, 500));
  std::vector<QuantumState> states = {QuantumState::zero(3), gate_on_plus(gates::S()),
                                      gate_on_plus(gates::T())};
  for (int i = 0; i < 20; ++i) states.push_back(sample_stabilizer_state(1 + i % 4, 2, rng).second);
  std::uint64_t runs = 0, failures = 0;
  double max_dev = 0.0;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const double exact = stabilizer_imaginarity(states[s]);
    for (int k = 0; k < reps; ++k) {
      const Seed sd = child_seed(o.seed, 5000 + s * 100 + static_cast<std::uint64_t>(k));
      const EstimateReport rep = alg1_stabilizer_imaginarity(states[s], M, sd);
      const double dev = std::abs(rep.estimate - exact);
      max_dev = std::max(max_dev, dev);
      ++runs;
      if (dev > delta) ++failures;
    }
  }
  const double rate = static_cast<double>(failures) / static_cast<double>(runs);
  r.passed = rate <= nu;
  r.detail = "M=" + std::to_string(M) + " (4M copies), " + std::to_string(states.size()) + " states x " +
             std::to_string(reps) + " runs; failures=" + std::to_string(failures) + "/" +
             std::to_string(runs) + " rate=" + fmt(rate, 3) + " max|dev|=" + fmt(max_dev, 3);
  return r;
}

CheckResult c6_noise_separation(const AcceptanceOptions& o) {
  CheckResult r;
  const double p = 0.1;
  BuiltinConfig bc;
  bc.n = 4;
  bc.p = p;
  bc.shots = 1000;
  const auto ds = builtin_distinguishers(bc);
  const Distinguisher& purity_d = ds.front();
  const auto [ea, eb] = builtin_ensembles("purity", bc);
  const std::uint64_t trials = o.reduced ? 200 : 500;
  const AdvantageReport rep = run_experiment(ea, eb, purity_d, trials, child_seed(o.seed, 600));
  const double ceiling = 1.0;
  const bool sep = rep.success_probability >= 0.5 + p / 4.0;
  const bool under = rep.success_probability <= ceiling + 3.0 * rep.sigma;

  // Single-shot Pi_C at n=3 sees psi (x) psi, bounded by the t=2 moment.
  const double td = trace_distance(subset_phase_moment(3, 8, 2).moment, haar_moment(3, 2));
  const Distinguisher single = calibrate("coherence-single-shot", "hs-coherence", ShotBudget{1, 0.95},
                                         haar_analytics("hs_coherence", 8), 1.0 - 1.0 / 8.0);
  const AdvantageReport rep2 = run_experiment(haar_state_ensemble(3), subset_phase_ensemble(3, 8), single,
                                              o.reduced ? 1000 : 4000, child_seed(o.seed, 601), td);
  const bool under2 = rep2.success_probability <= *rep2.helstrom_ceiling + 3.0 * rep2.sigma;

  r.passed = sep && under && under2;
  r.detail = "purity SWAP test n=4 p=0.1 1000 shots x " + std::to_string(trials) +
             " trials: success=" + fmt(rep.success_probability, 4) + " (need >= " + fmt(0.5 + p / 4.0, 4) +
             ", ceiling " + fmt(ceiling, 3) + "); single-shot PiC n=3 K=8: success=" +
             fmt(rep2.success_probability, 4) + " +/- " + fmt(rep2.sigma, 2) + " <= Helstrom 1/2+TD=" +
             fmt(*rep2.helstrom_ceiling, 4);
  return r;
}

CheckResult c7_imaginarity_separations(const AcceptanceOptions& o) {
  CheckResult r;
  const std::uint64_t shots = 100;
  const Distinguisher d = calibrate("unitary-imaginarity", "unitary-imaginarity", ShotBudget{shots, 0.95},
                                    haar_analytics("unitary_imaginarity", 4), 0.0);
  const AdvantageReport rep = run_experiment(haar_unitary_ensemble(2), orthogonal_unitary_ensemble(2), d,
                                             o.reduced ? 200 : 500, child_seed(o.seed, 700));
  const bool part_a = rep.success_probability >= 0.95;

  const double delta = 0.1;
  const std::uint64_t pilot = o.reduced ? 50000 : 200000;
  std::vector<double> ratios;
  std::string costs;
  for (int n : {2, 4, 6}) {
    const EstimateReport est = estimate_state_imaginarity_inefficient(
        plus_state(n), ShotBudget{pilot, 0.95}, child_seed(o.seed, 710 + static_cast<std::uint64_t>(n)));
    const double cost = std::ceil(kZ95 * kZ95 * est.sample_variance / (delta * delta));
    ratios.push_back(cost / std::ldexp(1.0, n));
    costs += (costs.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + fmt(cost, 6) +
             " shots (/2^n=" + fmt(ratios.back(), 3) + ")";
  }
  const double spread = *std::max_element(ratios.begin(), ratios.end()) /
                        *std::min_element(ratios.begin(), ratios.end());
  const bool part_b = spread <= 1.5;
  r.passed = part_a && part_b;
  r.detail = "Haar vs orthogonal n=2, " + std::to_string(shots) + " shots/trial: success=" +
             fmt(rep.success_probability, 4) + "; estimator cost to delta=0.1: " + costs +
             "; spread=" + fmt(spread, 3);
  return r;
}

CheckResult c8_moment_bound(const AcceptanceOptions& o) {
  CheckResult r;
  const int ts[] = {1, 2};
  const std::size_t Ks[] = {2, 4, 8};
  const auto rows = moment_bound_table(3, ts, Ks, child_seed(o.seed, 800));
  bool monotone = true;
  double sxy = 0.0, sxx = 0.0, cmin = INFINITY, cmax = 0.0;
  std::string values;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (i > 0 && rows[i - 1].t == row.t && row.td > rows[i - 1].td + 1e-12) monotone = false;
    const double x = static_cast<double>(row.t * row.t) / static_cast<double>(row.K);
    sxy += x * row.td;
    sxx += x * x;
    if (row.td > 1e-12) {
      cmin = std::min(cmin, row.c);
      cmax = std::max(cmax, row.c);
    }
    values += (values.empty() ? "" : ", ") + std::string("t=") + std::to_string(row.t) + " K=" +
              std::to_string(row.K) + " TD=" + fmt(row.td, 4);
  }
  const double c_fit = sxy / sxx;
  const double spread = cmax > 0.0 ? cmax / cmin : 1.0;
  const bool stable = spread <= 2.0;
  r.passed = monotone && stable;
  r.detail = values + "; monotone in K: " + (monotone ? "yes" : "no") + "; fitted c=" + fmt(c_fit, 4) +
             ", per-point c in [" + fmt(cmin, 4) + ", " + fmt(cmax, 4) + "] spread x" + fmt(spread, 3);
  return r;
}

CheckResult c9_rebit(const AcceptanceOptions& o) {
  CheckResult r;
  Rng rng = make_rng(child_seed(o.seed, 900));
  double max_gap = 0.0, min_fid = 1.0;
  for (int i = 0; i < 50; ++i) {
    const QuantumState psi = sample_haar_state(1 + i % 5, rng);
    const RebitState enc = encode_rebit(psi);
    max_gap = std::max(max_gap, std::abs(rebit_flag_imaginarity(enc) - imaginarity_state(psi)));
    min_fid = std::min(min_fid, fidelity(decode_rebit(enc, rng).state, psi));
  }
  const RebitState enc = encode_rebit(sample_haar_state(3, rng));
  Rng drng = make_rng(child_seed(o.seed, 901));
  std::vector<double> attempts;
  for (int k = 0; k < 10000; ++k) attempts.push_back(static_cast<double>(decode_rebit(enc, drng).attempts));
  const MeanStat m = mean_stat(attempts);
  r.passed = max_gap <= 1e-10 && min_fid >= 1.0 - 1e-10 && std::abs(m.mean - 2.0) <= 0.05;
  r.detail = "flag vs direct max gap=" + fmt(max_gap, 3) + "; min round-trip fidelity=" +
             fmt(min_fid, 15) + "; mean attempts=" + fmt(m.mean, 4) + " over 10000 decodes";
  return r;
}

UnitaryMatrix sparse_product_unitary(int n, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  Matrix m = Matrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    Matrix g;
    switch (pick(rng)) {
      case 0: g = gates::H().matrix(); break;
      case 1: g = gates::S().matrix(); break;
      case 2: g = gates::X().matrix() * sample_diagonal_unitary(1, rng).matrix(); break;
      default: g = sample_haar_unitary(1, rng).matrix(); break;
    }
    m = kron(m, g);
  }
  return UnitaryMatrix::from_matrix(std::move(m));
}

CheckResult c10_inequalities(const AcceptanceOptions& o) {
  CheckResult r;
  constexpr double slack = 1e-8;
  Rng rng = make_rng(child_seed(o.seed, 1000));
  int renyi = 0, jensen = 0, lipschitz = 0, card = 0;

  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 3;
    const UnitaryMatrix u = i % 2 ? sample_haar_unitary(n, rng) : sparse_product_unitary(n, rng);
    const double cp = coherence_power(u);
    if (coherence_power_max(u) < cp - slack || cp < coherence_power_collision(u) - slack) ++renyi;
  }
  std::vector<QuantumState> corpus;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 5;
    switch (i % 4) {
      case 0:
      case 1: corpus.push_back(sample_haar_state(n, rng)); break;
      case 2: {
        std::uniform_int_distribution<std::size_t> k(1, std::size_t{1} << n);
        corpus.push_back(subset_state(sample_subset_phase(n, k(rng), rng), o));
        break;
      }
      default: corpus.push_back(sample_stabilizer_state(n, 2, rng).second); break;
    }
  }
  for (const QuantumState& psi : corpus) {
    const double c = rel_entropy_coherence(psi);
    if (c < -std::log(1.0 - hs_coherence(psi)) - slack) ++jensen;
    if (max_rel_entropy_coherence(psi) < c - slack) ++card;
  }
  std::normal_distribution<double> normal;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 4;
    const QuantumState a = sample_haar_state(n, rng);
    QuantumState b = a;
    if (i % 2 == 0) {
      b = sample_haar_state(n, rng);
    } else {
      const double eps = std::pow(10.0, -1 - (i / 2) % 3);
      Vector g(a.amplitudes().size());
      for (Eigen::Index k = 0; k < g.size(); ++k) g(k) = cplx(normal(rng), normal(rng));
      b = QuantumState::normalized(a.amplitudes() + eps * g);
    }
    const double lhs = std::abs(imaginarity_state(a) - imaginarity_state(b));
    if (lhs > 4.0 * (a.amplitudes() - b.amplitudes()).norm() + slack) ++lipschitz;
  }
  r.passed = renyi + jensen + lipschitz + card == 0;
  r.detail = "violations over 200 cases each: Renyi chain=" + std::to_string(renyi) +
             ", Jensen=" + std::to_string(jensen) + ", Lipschitz=" + std::to_string(lipschitz) +
             ", ln card >= C=" + std::to_string(card);
  return r;
}

Json run_cli_json(const std::vector<std::string>& args, std::string* raw = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (code != kExitOk) throw std::runtime_error("psr " + args.front() + " exited " + std::to_string(code) + ": " + err.str());
  if (raw) *raw = out.str();
  return Json::parse(out.str());
}

CheckResult c11_pseudoresource(const AcceptanceOptions& o) {
  CheckResult r;
  const int n = 6;
  const double p = 0.1;
  const std::vector<std::size_t> Ks = {2, 8, 16};
  const Json report = run_cli_json({"pseudoresource", "--n", "6", "--K", "2,8,16", "--p", "0.1",
                                    "--seed", std::to_string(o.seed.master)});
  const std::uint64_t d = std::uint64_t{1} << n;
  double err = 0.0;
  double delta_purity = NAN;
  bool ordered = true;
  std::string summary;
  std::vector<std::pair<double, double>> gaps;  // (coherence delta, imaginarity delta) per K
  for (const Json& row : report["rows"]) {
    const std::string res = row["resource"].get<std::string>();
    const double g = row["g"].get<double>(), f = row["f"].get<double>();
    const double qmax = row["q_max"].get<double>(), delta = row["delta"].get<double>();
    err = std::max(err, std::abs(delta - (f - g) / qmax));
    if (res == "purity") {
      err = std::max({err, std::abs(g - (1.0 - p + p * p / 2.0)), std::abs(f - 1.0), std::abs(qmax - 1.0)});
      delta_purity = delta;
      summary += "purity g=" + fmt(g, 6) + " f=1 delta=" + fmt(delta, 4);
    } else if (res == "coherence") {
      const double K = row["K"].get<double>();
      err = std::max({err, std::abs(g - std::log(K)), std::abs(f - haar_analytics("rel_entropy_coherence", d)),
                      std::abs(qmax - n * std::log(2.0))});
      gaps.push_back({delta, NAN});
      summary += "; coherence K=" + fmt(K, 3) + " g=ln K=" + fmt(g, 5) + " f=" + fmt(f, 5) + " delta=" + fmt(delta, 4);
    } else if (res == "imaginarity") {
      err = std::max({err, std::abs(g), std::abs(f - haar_analytics("state_imaginarity", d))});
      if (!gaps.empty()) gaps.back().second = delta;
      summary += " | imaginarity g=" + fmt(g, 3) + " f=" + fmt(f, 5) + " delta=" + fmt(delta, 4);
    }
  }
  for (const auto& [dc, di] : gaps) ordered = ordered && delta_purity < dc && dc < di;
  // Independent rebuild of the low-resource states.
  Rng rng = make_rng(child_seed(o.seed, 1100));
  for (std::size_t K : Ks) {
    const QuantumState psi = subset_state(sample_subset_phase(n, K, rng), o);
    err = std::max(err, std::abs(rel_entropy_coherence(psi) - std::log(static_cast<double>(K))));
  }
  r.passed = err <= 1e-10 && ordered && gaps.size() == Ks.size();
  r.detail = "n=6: " + summary + "; max formula error=" + fmt(err, 3) +
             "; delta ordering purity < coherence < imaginarity: " + (ordered ? "yes" : "no");
  return r;
}

CheckResult c12_determinism(const AcceptanceOptions&) {
  CheckResult r;
  const std::vector<std::vector<std::string>> invocations = {
      {"measure", "--what", "coherence", "--source", "subset-phase", "--n", "6", "--K", "8", "--seed", "7"},
      {"measure", "--what", "unitary-imaginarity", "--source", "haar", "--n", "2", "--samples", "200", "--seed", "3"},
      {"protocol", "--name", "swap-test", "--n", "3", "--p", "0.1", "--shots", "500", "--seed", "5"},
      {"protocol", "--name", "alg1-stabilizer-imaginarity", "--source", "stabilizer", "--n", "3", "--shots", "300", "--seed", "5"},
      {"protocol", "--name", "bell-sampling", "--n", "2", "--shots", "1000", "--seed", "9"},
      {"protocol", "--name", "coherence-power", "--n", "2", "--shots", "400", "--seed", "9"},
      {"distinguish", "--name", "coherence", "--n", "3", "--K", "2", "--trials", "30", "--shots", "50", "--seed", "11"},
      {"moments", "--n", "2", "--t", "1,2", "--K", "1,2,4", "--seed", "1"},
      {"rebit", "--n", "3", "--shots", "200", "--decode-runs", "200", "--seed", "4"},
      {"pseudoresource", "--n", "4", "--K", "2,4", "--samples", "50", "--seed", "2"},
  };
  int identical = 0;
  std::string broken;
  for (const auto& args : invocations) {
    std::string a, b;
    run_cli_json(args, &a);
    run_cli_json(args, &b);
    if (a == b) ++identical;
    else broken += " " + args.front();
  }
  std::string s1, s2;
  run_cli_json({"measure", "--what", "imaginarity", "--source", "haar", "--n", "3", "--seed", "1"}, &s1);
  run_cli_json({"measure", "--what", "imaginarity", "--source", "haar", "--n", "3", "--seed", "2"}, &s2);
  const bool seed_used = s1 != s2;
  r.passed = identical == static_cast<int>(invocations.size()) && seed_used;
  r.detail = std::to_string(identical) + "/" + std::to_string(invocations.size()) +
             " invocations byte-identical on repeat" + (broken.empty() ? "" : " (differs:" + broken + ")") +
             "; different seeds give different output: " + (seed_used ? "yes" : "no");
  return r;
}

struct Criterion {
  const char* name;
  const char* anchor;
  std::function<CheckResult(const AcceptanceOptions&)> run;
  double time_limit;  // seconds at full scale; 0 for none
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"Haar state imaginarity", "E[I] = 1 - 2/(d+1)", c1_haar_state_imaginarity, 10.0},
      {"Haar unitary imaginarity", "E[I_p] = 1 - 2/(d(d+1)); Choi-state identity", c2_haar_unitary_imaginarity, 0.0},
      {"Haar coherence", "E[C2] = 1 - 2/(d+1); E[sum|U|^4]/d = 2/(d+1)", c3_haar_coherence, 0.0},
      {"Protocol exactness", "SWAP, Pi_C, P_Phi, coherence-power and Bell-sampling probabilities",
       c4_protocol_exactness, 0.0},
      {"Algorithm 1", "I_STAB via Bell sampling; Hoeffding budget with range 2", c5_algorithm1, 60.0},
      {"Noise separation", "SWAP-test purity gap 1-p+p^2/2; Helstrom 1/2+TD", c6_noise_separation, 0.0},
      {"Imaginarity separations", "real unitaries not pseudorandom; O(2^n) state estimator cost",
       c7_imaginarity_separations, 0.0},
      {"Moment bound", "TD(subset-phase, Haar) = O(t^2/K)", c8_moment_bound, 300.0},
      {"Rebit identities", "I = 2(1 - tr rho_flag^2); decode success 1/2", c9_rebit, 0.0},
      {"Inequality suites", "Renyi chain, Jensen, Lipschitz eta=4, ln card >= C", c10_inequalities, 0.0},
      {"Pseudoresource table", "gap f(n) vs g(n), Delta = (f-g)/Q_max", c11_pseudoresource, 0.0},
      {"Determinism", "same seed, byte-identical JSON", c12_determinism, 0.0},
  };
  return all;
}

}  // namespace

CheckResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kNumCriteria) throw std::out_of_range("acceptance criterion id out of range");
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = c.run(options);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.id = id;
  r.name = c.name;
  r.anchor = c.anchor;
  if (!options.reduced && c.time_limit > 0.0 && r.seconds > c.time_limit) {
    r.passed = false;
    r.detail += "; runtime " + fmt(r.seconds, 3) + " s exceeds " + fmt(c.time_limit, 3) + " s";
  }
  return r;
}

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options, std::span<const int> ids) {
  std::vector<CheckResult> out;
  if (ids.empty()) {
    for (int id = 1; id <= kNumCriteria; ++id) out.push_back(run_criterion(id, options));
  } else {
    for (int id : ids) out.push_back(run_criterion(id, options));
  }
  return out;
}

std::string format_check(const CheckResult& c) {
  char head[32];
  std::snprintf(head, sizeof head, "%s [%2d] ", c.passed ? "PASS" : "FAIL", c.id);
  return head + c.name + " (" + c.anchor + "): " + c.detail + " [" + fmt(c.seconds, 3) + " s]";
}

Json to_json(const CheckResult& c) {
  return Json{{"id", c.id},
              {"name", c.name},
              {"anchor", c.anchor},
              {"passed", c.passed},
              {"detail", c.detail}};
}

}  // namespace psr
