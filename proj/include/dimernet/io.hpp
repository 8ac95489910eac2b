// Copyright 2026 The dimernet Authors
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

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dimernet/bounds.hpp"
#include "dimernet/entanglement.hpp"
#include "dimernet/lattice.hpp"
#include "dimernet/rdm.hpp"
#include "dimernet/state.hpp"

namespace dimernet::io {

using json = nlohmann::json;

/// Version stamped into every JSON document this library writes.
std::string report_schema_version();

/// Accepts a path to a JSON file, an inline JSON object, or the short forms
/// "chain:6", "square:2x4", "complete:4". Throws LatticeSpecError.
LatticeGraph parse_lattice(const std::string& spec, int max_nodes = default_node_budget());
LatticeGraph lattice_from_json(const json& doc, int max_nodes = default_node_budget());
json lattice_to_json(const LatticeGraph& graph);

/// "sym:P", "fixed:i,j,k", "none", or a bare count interpreted with
/// `bare_mode`.
DefectPattern parse_defects(const std::string& spec, DefectMode bare_mode = DefectMode::symmetric);

/// One JSON header line, then 3^N little-endian (re, im) float64 pairs.
void write_state_dump(std::ostream& os, const QutritState& state);
QutritState read_state_dump(std::istream& is);

json to_json(const DensityMatrix& rho);
json to_json(const SingleNodeForm& form);
json to_json(const TwoNodeForm& form);
json to_json(const GMEReport& report);
json to_json(const BoundReport& report);
json to_json(const PptResult& ppt);

/// Common envelope: schema version, sign convention, defect mode, config echo.
json envelope(const std::string& command, const StateMeta& meta, const json& config);

/// Serialized with a trailing newline; key order is sorted so output is stable.
std::string dump(const json& doc);

}  // namespace dimernet::io
