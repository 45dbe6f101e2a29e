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

#include "psr/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "psr/acceptance.h"
#include "psr/distinguish.h"
#include "psr/ensembles.h"
#include "psr/io.h"
#include "psr/measures.h"
#include "psr/moments.h"
#include "psr/protocols.h"
#include "psr/rebit.h"
#include "psr/stats.h"

namespace psr {

namespace {

struct SourceOptions {
  std::string source = "haar";
  std::size_t K = 4;
  int depth = 2;
};

bool contains(const std::vector<std::string>& names, const std::string& x) {
  return std::find(names.begin(), names.end(), x) != names.end();
}

std::optional<Sample> load_if_file(const std::string& source) {
  if (source.rfind("file:", 0) == 0) return load_sample_file(source.substr(5));
  return std::nullopt;
}

// One state or unitary from the named source.
Sample draw(const SourceOptions& s, bool unitary, int n, Rng& rng,
            const std::optional<Sample>& file) {
  if (file) {
    const bool is_unitary = std::holds_alternative<UnitaryMatrix>(*file);
    if (is_unitary != unitary) {
      throw std::invalid_argument(std::string("source file holds a ") +
                                  (is_unitary ? "unitary" : "state") + " but a " +
                                  (unitary ? "unitary" : "state") + " is required");
    }
    return *file;
  }
  if (unitary) {
    if (s.source == "haar") return sample_haar_unitary(n, rng);
    if (s.source == "orthogonal") return sample_haar_orthogonal(n, rng);
    if (s.source == "diagonal") return sample_diagonal_unitary(n, rng);
    if (s.source == "identity") return UnitaryMatrix::identity(n);
    if (s.source == "hadamard") return gates::on_all(gates::H(), n);
    throw std::invalid_argument("unitary source must be haar, orthogonal, diagonal, identity, "
                                "hadamard or file:PATH (got '" + s.source + "')");
  }
  if (s.source == "haar") return sample_haar_state(n, rng);
  if (s.source == "subset-phase") return build_subset_phase_state(sample_subset_phase(n, s.K, rng));
  if (s.source == "stabilizer") return sample_stabilizer_state(n, s.depth, rng).second;
  if (s.source == "zero") return QuantumState::zero(n);
  throw std::invalid_argument("state source must be haar, subset-phase, stabilizer, zero or "
                              "file:PATH (got '" + s.source + "')");
}

int sample_n(const Sample& s) {
  return std::visit([](const auto& v) { return v.num_qubits(); }, s);
}

Json source_json(const SourceOptions& s) {
  Json j{{"source", s.source}};
  if (s.source == "subset-phase") j["K"] = s.K;
  if (s.source == "stabilizer") j["depth"] = s.depth;
  return j;
}

void add_source_options(CLI::App* sub, SourceOptions& s) {
  sub->add_option("--source", s.source,
                  "haar | subset-phase | stabilizer | zero | orthogonal | diagonal | identity | "
                  "hadamard | file:PATH")
      ->capture_default_str();
  sub->add_option("--K", s.K, "Subset size for subset-phase states")->capture_default_str();
  sub->add_option("--depth", s.depth, "Stabilizer circuit depth")->capture_default_str();
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Qubit count")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  sub->add_option("--format", cfg.format, "json | csv | text")->capture_default_str();
  sub->add_option("--output", cfg.output, "Write the report to this path");
}

void add_shots(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--shots", cfg.shots, "Shots per protocol run")->capture_default_str();
  sub->add_option("--confidence", cfg.confidence, "Confidence level of the half-width")
      ->capture_default_str();
}

std::string render(const Json& result, const std::string& format) {
  if (format == "json") return result.dump(2) + "\n";
  if (format == "text") return to_text(result);
  if (result.contains("rows") && result["rows"].is_array()) {
    std::vector<Json> rows(result["rows"].begin(), result["rows"].end());
    return to_csv(rows);
  }
  return to_csv({result});
}

// ---------------------------------------------------------------------------
// Subcommands

struct MeasureArgs {
  std::string what;
  SourceOptions src;
  std::uint64_t samples = 1;
  double p = 0.0;
};

Json cmd_measure(const RunConfig& cfg, const MeasureArgs& a) {
  const bool unitary = contains(unitary_measure_names(), a.what);
  if (!unitary && !contains(state_measure_names(), a.what)) {
    throw std::invalid_argument("unknown measure '" + a.what + "'");
  }
  if (a.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  const auto file = load_if_file(a.src.source);
  if (file && a.samples != 1) throw std::invalid_argument("a file source gives exactly one sample");
  Rng rng = make_rng(Seed{cfg.seed, 0});
  std::vector<double> values;
  int n = cfg.n;
  for (std::uint64_t i = 0; i < a.samples; ++i) {
    const Sample s = draw(a.src, unitary, cfg.n, rng, file);
    n = sample_n(s);
    if (unitary) {
      values.push_back(evaluate_unitary_measure(a.what, std::get<UnitaryMatrix>(s)).value);
    } else if (a.what == "purity" || a.what == "robustness") {
      DensityMatrix rho = DensityMatrix::from_state(std::get<QuantumState>(s));
      if (a.p > 0.0) rho = depolarize(rho, 0, a.p);
      values.push_back(a.what == "purity" ? purity(rho) : robustness_imaginarity(rho));
    } else {
      values.push_back(evaluate_state_measure(a.what, std::get<QuantumState>(s)).value);
    }
  }
  Json j{{"command", "measure"}, {"what", a.what}};
  j.update(source_json(a.src));
  j["n"] = n;
  if (a.p > 0.0) j["p"] = a.p;
  j["samples"] = a.samples;
  j["seed"] = to_json(Seed{cfg.seed, 0});
  if (a.samples == 1) {
    j["value"] = values.front();
  } else {
    const MeanStat m = mean_stat(values);
    j["mean"] = m.mean;
    j["stddev"] = m.stddev;
    j["standard_error"] = m.standard_error;
  }
  return j;
}

struct ProtocolArgs {
  std::string name;
  SourceOptions src;
  double p = 0.0;
};

Json cmd_protocol(const RunConfig& cfg, const ProtocolArgs& a) {
  if (!contains(protocol_names(), a.name)) throw std::invalid_argument("unknown protocol '" + a.name + "'");
  const bool unitary = a.name == "unitary-imaginarity" || a.name == "coherence-power";
  const auto file = load_if_file(a.src.source);
  Rng rng = make_rng(Seed{cfg.seed, 0});
  const Sample s = draw(a.src, unitary, cfg.n, rng, file);
  const Seed shot_seed{cfg.seed, 1};
  const ShotBudget budget{cfg.shots, cfg.confidence};
  Json report;
  if (a.name == "swap-test") {
    DensityMatrix rho = DensityMatrix::from_state(std::get<QuantumState>(s));
    if (a.p > 0.0) rho = depolarize(rho, 0, a.p);
    report = to_json(swap_test(rho, rho, budget, shot_seed));
  } else if (a.name == "hs-coherence") {
    report = to_json(estimate_hs_coherence(std::get<QuantumState>(s), budget, shot_seed));
  } else if (a.name == "state-imaginarity-inefficient") {
    report = to_json(estimate_state_imaginarity_inefficient(std::get<QuantumState>(s), budget, shot_seed));
  } else if (a.name == "bell-sampling") {
    report = to_json(bell_sample(std::get<QuantumState>(s), budget, shot_seed));
  } else if (a.name == "alg1-stabilizer-imaginarity") {
    report = to_json(alg1_stabilizer_imaginarity(std::get<QuantumState>(s), cfg.shots, shot_seed,
                                                 cfg.confidence));
  } else if (a.name == "unitary-imaginarity") {
    report = to_json(estimate_unitary_imaginarity(std::get<UnitaryMatrix>(s), budget, shot_seed));
  } else {
    report = to_json(estimate_coherence_power(std::get<UnitaryMatrix>(s), budget, shot_seed));
  }
  Json j{{"command", "protocol"}};
  j.update(source_json(a.src));
  if (a.p > 0.0) j["p"] = a.p;
  j.update(report);
  return j;
}

struct DistinguishArgs {
  std::string name = "purity";
  int n_unitary = 2;
  std::size_t K = 4;
  double p = 0.1;
  bool swap = false;
  std::optional<double> threshold;
};

Json cmd_distinguish(const RunConfig& cfg, const DistinguishArgs& a) {
  BuiltinConfig bc;
  bc.n = cfg.n;
  bc.n_unitary = a.n_unitary;
  bc.K = a.K;
  bc.p = a.p;
  bc.shots = cfg.shots;
  const auto all = builtin_distinguishers(bc);
  const auto it = std::find_if(all.begin(), all.end(), [&](const Distinguisher& d) { return d.name == a.name; });
  if (it == all.end()) throw std::invalid_argument("unknown distinguisher '" + a.name + "'");
  Distinguisher d = *it;
  if (a.threshold) d.threshold = *a.threshold;
  auto [ea, eb] = builtin_ensembles(a.name, bc);
  if (a.swap) {
    std::swap(ea, eb);
    d.high_is_a = !d.high_is_a;
  }
  const AdvantageReport rep = run_experiment(ea, eb, d, cfg.trials, Seed{cfg.seed, 0});
  Json j{{"command", "distinguish"},
         {"protocol", d.protocol},
         {"threshold", d.threshold},
         {"high_is_a", d.high_is_a},
         {"shots", d.budget.shots}};
  j.update(to_json(rep));
  return j;
}

struct MomentsArgs {
  std::vector<int> ts{1, 2};
  std::vector<std::size_t> Ks{2, 4, 8};
};

Json cmd_moments(const RunConfig& cfg, const MomentsArgs& a) {
  const auto table = moment_bound_table(cfg.n, a.ts, a.Ks, Seed{cfg.seed, 0});
  Json rows = Json::array();
  for (const MomentBoundRow& r : table) {
    Json row = to_json(r);
    row["helstrom"] = r.td <= 0.5 ? Json(helstrom_probability(r.td)) : Json(nullptr);
    rows.push_back(row);
  }
  const std::uint64_t d = std::uint64_t{1} << cfg.n;
  Json analytics = Json::object();
  for (const std::string& name : haar_analytics_names()) analytics[name] = haar_analytics(name, d);
  return Json{{"command", "moments"}, {"n", cfg.n}, {"seed", to_json(Seed{cfg.seed, 0})},
              {"haar_analytics", analytics}, {"rows", rows}};
}

struct RebitArgs {
  SourceOptions src;
  std::uint64_t decode_runs = 1000;
};

Json cmd_rebit(const RunConfig& cfg, const RebitArgs& a) {
  if (a.decode_runs < 1) throw std::invalid_argument("--decode-runs must be >= 1");
  const auto file = load_if_file(a.src.source);
  Rng rng = make_rng(Seed{cfg.seed, 0});
  const QuantumState psi = std::get<QuantumState>(draw(a.src, false, cfg.n, rng, file));
  const RebitState enc = encode_rebit(psi);
  Rng decode_rng = make_rng(Seed{cfg.seed, 2});
  std::vector<double> attempts;
  double fid = 1.0;
  for (std::uint64_t i = 0; i < a.decode_runs; ++i) {
    const DecodeResult r = decode_rebit(enc, decode_rng);
    attempts.push_back(static_cast<double>(r.attempts));
    fid = std::min(fid, fidelity(r.state, psi));
  }
  const MeanStat m = mean_stat(attempts);
  const ShotBudget budget{cfg.shots, cfg.confidence};
  Json j{{"command", "rebit"}};
  j.update(source_json(a.src));
  j["n"] = psi.num_qubits();
  j["seed"] = to_json(Seed{cfg.seed, 0});
  j["flag_imaginarity"] = rebit_flag_imaginarity(enc);
  j["imaginarity"] = imaginarity_state(psi);
  j["decode"] = Json{{"runs", a.decode_runs},
                     {"success_probability", decode_success_probability(enc)},
                     {"mean_attempts", m.mean},
                     {"standard_error", m.standard_error},
                     {"min_round_trip_fidelity", fid}};
  j["flag_swap_test"] = to_json(estimate_flag_imaginarity(enc, budget, Seed{cfg.seed, 1}));
  j["qubit_route"] = to_json(estimate_state_imaginarity_inefficient(psi, budget, Seed{cfg.seed, 1}));
  return j;
}

struct PseudoArgs {
  std::vector<std::size_t> Ks{8};
  double p = 0.1;
  std::uint64_t samples = 200;
};

Json cmd_pseudoresource(const RunConfig& cfg, const PseudoArgs& a) {
  const auto rows = pseudoresource_report(cfg.n, a.Ks, a.p, Seed{cfg.seed, 0}, a.samples);
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return Json{{"command", "pseudoresource"}, {"n", cfg.n},          {"p", a.p},
              {"samples", a.samples},         {"seed", to_json(Seed{cfg.seed, 0})},
              {"rows", arr}};
}

struct SelftestArgs {
  bool json = false;
  bool full = false;
  std::string inject;
  std::vector<int> only;
};

int cmd_selftest(const RunConfig& cfg, const SelftestArgs& a, std::ostream& out) {
  AcceptanceOptions opt;
  opt.reduced = !a.full;
  opt.seed = Seed{cfg.seed, 0};
  if (!a.inject.empty()) {
    if (a.inject != "normalization") throw std::invalid_argument("--inject-fault supports 'normalization'");
    opt.inject_normalization_fault = true;
  }
  for (int id : a.only) {
    if (id < 1 || id > kNumCriteria) throw std::invalid_argument("--only ids must lie in [1, 12]");
  }
  const auto results = run_acceptance(opt, a.only);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
  if (a.json) {
    Json checks = Json::array();
    for (const auto& c : results) checks.push_back(to_json(c));
    out << Json{{"command", "selftest"}, {"reduced", opt.reduced}, {"seed", to_json(opt.seed)},
                {"passed", ok}, {"checks", checks}}.dump(2)
        << "\n";
  } else {
    for (const auto& c : results) out << format_check(c) << "\n";
    out << (ok ? "selftest: all checks passed" : "selftest: FAILED") << "\n";
  }
  return ok ? kExitOk : kExitRuntime;
}

}  // namespace

void RunConfig::validate() const {
  if (n < 1 || n > kMaxStateQubits) {
    throw std::invalid_argument("--n must lie in [1, " + std::to_string(kMaxStateQubits) + "]");
  }
  if (shots < 1) throw std::invalid_argument("--shots must be >= 1");
  if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("--confidence must lie in (0, 1)");
  if (format != "json" && format != "csv" && format != "text") {
    throw std::invalid_argument("--format must be json, csv or text");
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudorandomness and quantum resource toolkit", "psr"};
  app.require_subcommand(1);
  RunConfig cfg;

  MeasureArgs measure;
  auto* m = app.add_subcommand("measure", "Exact resource measures of sampled or loaded inputs");
  add_common(m, cfg);
  add_source_options(m, measure.src);
  m->add_option("--what", measure.what, "Measure name")->required();
  m->add_option("--samples", measure.samples, "Number of samples to average")->capture_default_str();
  m->add_option("--p", measure.p, "Depolarizing probability for purity and robustness");

  ProtocolArgs protocol;
  auto* pr = app.add_subcommand("protocol", "Shot-based measurement protocols");
  add_common(pr, cfg);
  add_shots(pr, cfg);
  add_source_options(pr, protocol.src);
  pr->add_option("--name", protocol.name, "Protocol name")->required();
  pr->add_option("--p", protocol.p, "Depolarizing probability applied before the SWAP test");

  DistinguishArgs dist;
  auto* di = app.add_subcommand("distinguish", "Two-player indistinguishability experiment");
  add_common(di, cfg);
  add_shots(di, cfg);
  di->add_option("--name", dist.name, "purity | unitary-imaginarity | coherence | coherence-power")
      ->capture_default_str();
  di->add_option("--trials", cfg.trials, "Number of trials")->capture_default_str();
  di->add_option("--n-unitary", dist.n_unitary, "Qubits for unitary ensembles")->capture_default_str();
  di->add_option("--K", dist.K, "Subset size for subset-phase states")->capture_default_str();
  di->add_option("--p", dist.p, "Depolarizing probability")->capture_default_str();
  di->add_flag("--swap", dist.swap, "Exchange ensembles A and B");
  di->add_option("--threshold", dist.threshold, "Override the calibrated threshold");

  MomentsArgs mom;
  auto* mo = app.add_subcommand("moments", "Trace distance between subset-phase and Haar moments");
  add_common(mo, cfg);
  mo->add_option("--t", mom.ts, "Copy numbers")->delimiter(',')->capture_default_str();
  mo->add_option("--K", mom.Ks, "Subset sizes")->delimiter(',')->capture_default_str();

  RebitArgs reb;
  auto* re = app.add_subcommand("rebit", "Rebit encoding, decoding and flag imaginarity");
  add_common(re, cfg);
  add_shots(re, cfg);
  add_source_options(re, reb.src);
  re->add_option("--decode-runs", reb.decode_runs, "Independent decode runs")->capture_default_str();

  PseudoArgs pseudo;
  auto* ps = app.add_subcommand("pseudoresource", "Pseudoresource gap table");
  add_common(ps, cfg);
  ps->add_option("--K", pseudo.Ks, "Subset sizes")->delimiter(',')->capture_default_str();
  ps->add_option("--p", pseudo.p, "Depolarizing probability")->capture_default_str();
  ps->add_option("--samples", pseudo.samples, "Haar samples for the Monte Carlo column")
      ->capture_default_str();

  SelftestArgs self;
  auto* st = app.add_subcommand("selftest", "Run the acceptance checks at reduced sizes");
  st->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  st->add_flag("--json", self.json, "Machine-readable check list");
  st->add_flag("--full", self.full, "Use the full acceptance sample sizes");
  st->add_option("--inject-fault", self.inject, "Deliberately break a component (normalization)");
  st->add_option("--only", self.only, "Run only these criteria")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.validate();
    if (st->parsed()) return cmd_selftest(cfg, self, out);
    Json result;
    if (m->parsed()) result = cmd_measure(cfg, measure);
    else if (pr->parsed()) result = cmd_protocol(cfg, protocol);
    else if (di->parsed()) result = cmd_distinguish(cfg, dist);
    else if (mo->parsed()) result = cmd_moments(cfg, mom);
    else if (re->parsed()) result = cmd_rebit(cfg, reb);
    else result = cmd_pseudoresource(cfg, pseudo);

    const std::string text = render(result, cfg.format);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.output);
      if (!f) throw std::runtime_error("cannot write '" + cfg.output + "'");
      f << text;
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace psr
