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

#include "psr/io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace psr {

namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::vector<double> read_numbers(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw std::invalid_argument(std::string("state file: missing array '") + key + "'");
  }
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw std::invalid_argument(std::string("state file: non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  return s;
}

void text_into(std::ostringstream& os, const Json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << it.key() << ":\n";
      for (const Json& row : v) {
        os << indent << "  -\n";
        text_into(os, row, indent + "    ");
      }
    } else if (v.is_object()) {
      os << indent << it.key() << ":\n";
      text_into(os, v, indent + "  ");
    } else {
      os << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

Json to_json(const QuantumState& psi) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) {
    re.push_back(psi.amplitudes()(k).real());
    im.push_back(psi.amplitudes()(k).imag());
  }
  return Json{{"n", psi.num_qubits()}, {"kind", "state"}, {"re", re}, {"im", im}};
}

Json to_json(const UnitaryMatrix& u) {
  Json re = Json::array(), im = Json::array();
  const Matrix& m = u.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return Json{{"n", u.num_qubits()}, {"kind", "unitary"}, {"re", re}, {"im", im}};
}

Sample sample_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("state file: top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw std::invalid_argument("state file: missing integer 'n'");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("state file: missing string 'kind'");
  }
  const int n = j["n"].get<int>();
  const std::string kind = j["kind"].get<std::string>();
  const std::vector<double> re = read_numbers(j, "re");
  const std::vector<double> im = read_numbers(j, "im");
  if (re.size() != im.size()) throw std::invalid_argument("state file: 're' and 'im' differ in length");
  if (n < 1 || n > kMaxStateQubits) throw std::invalid_argument("state file: n out of range");
  const std::size_t d = std::size_t{1} << n;
  if (kind == "state") {
    if (re.size() != d) throw std::invalid_argument("state file: expected 2^n amplitudes");
    Vector v(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) v(static_cast<Eigen::Index>(k)) = cplx(re[k], im[k]);
    return QuantumState::from_amplitudes(std::move(v));
  }
  if (kind == "unitary") {
    if (n > kMaxMatrixQubits) throw std::invalid_argument("state file: unitary n out of range");
    if (re.size() != d * d) throw std::invalid_argument("state file: expected 4^n matrix entries");
    Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cplx(re[r * d + c], im[r * d + c]);
      }
    }
    return UnitaryMatrix::from_matrix(std::move(m));
  }
  throw std::invalid_argument("state file: kind must be 'state' or 'unitary'");
}

Sample load_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("state file '" + path + "': " + e.what());
  }
  return sample_from_json(j);
}

Json to_json(const Seed& seed) { return Json{{"master", seed.master}, {"stream", seed.stream}}; }

Json to_json(const ResourceValue& v) { return Json{{"name", v.name}, {"n", v.n}, {"value", v.value}}; }

Json to_json(const EstimateReport& r) {
  return Json{{"protocol", r.protocol},
              {"n", r.n},
              {"estimate", r.estimate},
              {"exact", optional_number(r.exact)},
              {"probability", optional_number(r.probability)},
              {"shots", r.shots},
              {"successes", r.successes},
              {"copies", r.copies},
              {"range", r.range},
              {"half_width", r.half_width},
              {"confidence", r.confidence},
              {"seed", to_json(r.seed)}};
}

Json to_json(const BellSampleReport& r) {
  Json rows = Json::array();
  for (std::uint64_t label = 0; label < r.exact.size(); ++label) {
    const auto it = r.counts.find(label);
    const std::uint64_t count = it == r.counts.end() ? 0 : it->second;
    if (count == 0 && r.exact[label] < 1e-15) continue;
    rows.push_back(Json{{"pauli", PauliString::from_index(r.n, label).label()},
                        {"exact", r.exact[label]},
                        {"count", count}});
  }
  return Json{{"protocol", "bell-sampling"}, {"n", r.n},   {"shots", r.shots},
              {"copies", 2 * r.shots},       {"total_variation", r.total_variation()},
              {"seed", to_json(r.seed)},     {"outcomes", rows}};
}

Json to_json(const AdvantageReport& r) {
  return Json{{"distinguisher", r.distinguisher},
              {"ensemble_a", r.ensemble_a},
              {"ensemble_b", r.ensemble_b},
              {"trials", r.trials},
              {"successes", r.successes},
              {"success_probability", r.success_probability},
              {"interval_lo", r.interval.lo},
              {"interval_hi", r.interval.hi},
              {"sigma", r.sigma},
              {"helstrom_ceiling", optional_number(r.helstrom_ceiling)},
              {"seed", to_json(r.seed)}};
}

Json to_json(const PseudoresourceRow& r) {
  return Json{{"resource", r.resource},
              {"K", r.K ? Json(*r.K) : Json(nullptr)},
              {"g", r.low},
              {"g_formula", r.low_formula},
              {"f", r.high},
              {"f_monte_carlo", r.high_monte_carlo},
              {"f_standard_error", r.high_standard_error},
              {"q_max", r.q_max},
              {"delta", r.delta}};
}

Json to_json(const MomentBoundRow& r) {
  return Json{{"n", r.n},   {"t", r.t},         {"K", r.K},
              {"td", r.td}, {"c", r.c},         {"exact", r.exact},
              {"standard_error", r.standard_error}};
}

std::string to_csv(const std::vector<Json>& rows) {
  if (rows.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
    os << (first ? "" : ",") << it.key();
    first = false;
  }
  os << "\n";
  for (const Json& row : rows) {
    first = true;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
      os << (first ? "" : ",") << (row.contains(it.key()) ? csv_cell(row[it.key()]) : "");
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

std::string to_text(const Json& j) {
  std::ostringstream os;
  if (j.is_object()) text_into(os, j, "");
  else os << j.dump(2) << "\n";
  return os.str();
}

}  // namespace psr
