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

#ifndef PSR_IO_H
#define PSR_IO_H

#include <string>
#include <vector>

#include <json.hpp>

#include "psr/distinguish.h"
#include "psr/measures.h"
#include "psr/moments.h"
#include "psr/protocols.h"
#include "psr/qcore.h"

/// JSON / CSV / text records. Objects keep insertion order so that output is
/// byte-stable.
namespace psr {

using Json = nlohmann::ordered_json;

/// {"n", "kind": "state"|"unitary", "re": [...], "im": [...]}; unitaries are
/// row-major.
Json to_json(const QuantumState& psi);
Json to_json(const UnitaryMatrix& u);

/// Throws std::invalid_argument on malformed or inconsistent records.
Sample sample_from_json(const Json& j);
Sample load_sample_file(const std::string& path);

Json to_json(const Seed& seed);
Json to_json(const ResourceValue& v);
Json to_json(const EstimateReport& r);
Json to_json(const BellSampleReport& r);
Json to_json(const AdvantageReport& r);
Json to_json(const PseudoresourceRow& r);
Json to_json(const MomentBoundRow& r);

/// Header line from the keys of the first row, then one line per row. Nested
/// values are written as compact JSON.
std::string to_csv(const std::vector<Json>& rows);

/// "key: value" lines; arrays of objects become indented blocks.
std::string to_text(const Json& j);

}  // namespace psr

#endif  // PSR_IO_H
