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

#include "dimernet/io.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dimernet::io {

std::string report_schema_version() { return "1"; }

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ContractError("invalid integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

LatticeGraph lattice_from_json(const json& doc, int max_nodes) {
  try {
    if (!doc.is_object() || !doc.contains("kind")) {
      throw LatticeSpecError("lattice spec must be an object with a \"kind\" field");
    }
    const LatticeKind kind = lattice_kind_from_string(doc.at("kind").get<std::string>());
    if (kind != LatticeKind::custom) {
      return build_lattice(kind, doc.at("dims").get<std::vector<int>>(), max_nodes);
    }
    std::vector<Edge> edges;
    int max_index = -1;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw LatticeSpecError("edges must be [i, j] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      max_index = std::max({max_index, edges.back().first, edges.back().second});
    }
    int nodes = max_index + 1;
    if (doc.contains("nodes")) nodes = doc.at("nodes").get<int>();
    else if (doc.contains("dims")) nodes = doc.at("dims").at(0).get<int>();
    if (nodes > max_nodes) {
      throw BudgetError("custom lattice has " + std::to_string(nodes) + " nodes, budget is " +
                        std::to_string(max_nodes));
    }
    return LatticeGraph::from_edges(nodes, edges, LatticeKind::custom);
  } catch (const json::exception& e) {
    throw LatticeSpecError(std::string("malformed lattice spec: ") + e.what());
  } catch (const BudgetError&) {
    throw;
  } catch (const LatticeSpecError&) {
    throw;
  } catch (const ContractError& e) {
    throw LatticeSpecError(e.what());
  }
}

LatticeGraph parse_lattice(const std::string& spec, int max_nodes) {
  if (spec.empty()) throw LatticeSpecError("empty lattice spec");
  if (spec.front() == '{') {
    json doc;
    try {
      doc = json::parse(spec);
    } catch (const json::exception& e) {
      throw LatticeSpecError(std::string("invalid inline lattice JSON: ") + e.what());
    }
    return lattice_from_json(doc, max_nodes);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw LatticeSpecError("invalid lattice file " + spec + ": " + e.what());
    }
    return lattice_from_json(doc, max_nodes);
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw LatticeSpecError("unrecognized lattice spec '" + spec + "'");
  LatticeKind kind;
  try {
    kind = lattice_kind_from_string(spec.substr(0, colon));
  } catch (const LatticeSpecError&) {
    throw;
  }
  if (kind == LatticeKind::custom) throw LatticeSpecError("custom lattices need a JSON edge list");
  std::string dims_text = spec.substr(colon + 1);
  std::replace(dims_text.begin(), dims_text.end(), 'x', ',');
  std::vector<int> dims;
  try {
    dims = parse_int_list(dims_text, ',');
  } catch (const ContractError& e) {
    throw LatticeSpecError(e.what());
  }
  try {
    return build_lattice(kind, dims, max_nodes);
  } catch (const BudgetError&) {
    throw;
  } catch (const ContractError& e) {
    throw LatticeSpecError(e.what());
  }
}

json lattice_to_json(const LatticeGraph& graph) {
  json doc;
  doc["kind"] = to_string(graph.kind());
  doc["nodes"] = graph.node_count();
  if (!graph.dims().empty()) doc["dims"] = graph.dims();
  json edges = json::array();
  for (auto [a, b] : graph.edges()) edges.push_back({a, b});
  doc["edges"] = edges;
  return doc;
}

DefectPattern parse_defects(const std::string& spec, DefectMode bare_mode) {
  if (spec.empty() || spec == "none") return DefectPattern::none();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    const std::vector<int> v = parse_int_list(spec, ',');
    if (v.size() != 1) throw ContractError("invalid defect spec '" + spec + "'");
    if (bare_mode == DefectMode::fixed) throw ContractError("fixed mode needs explicit defect nodes");
    return DefectPattern::symmetric(v[0]);
  }
  const std::string head = spec.substr(0, colon);
  const std::string tail = spec.substr(colon + 1);
  if (head == "sym" || head == "symmetric") {
    const std::vector<int> v = parse_int_list(tail, ',');
    if (v.size() != 1) throw ContractError("sym: takes a single defect count");
    return DefectPattern::symmetric(v[0]);
  }
  if (head == "fixed") return DefectPattern::fixed(parse_int_list(tail, ','));
  throw ContractError("unknown defect mode '" + head + "'");
}

namespace {

void put_le_double(std::ostream& os, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  os.write(bytes, 8);
}

double get_le_double(std::istream& is) {
  unsigned char bytes[8];
  if (!is.read(reinterpret_cast<char*>(bytes), 8)) throw ContractError("truncated state dump");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

}  // namespace

void write_state_dump(std::ostream& os, const QutritState& state) {
  json header;
  header["schema_version"] = report_schema_version();
  header["format"] = "dimernet-state";
  header["encoding"] = "float64-le-interleaved-re-im";
  header["node_count"] = state.node_count();
  header["node_order"] = state.node_order();
  header["amplitude_count"] = state.amplitudes().size();
  header["convention"] = state.meta().convention;
  header["graph"] = state.meta().graph_id;
  header["defects"] = state.meta().defects.describe();
  header["defect_mode"] = to_string(state.meta().defects.mode);
  os << header.dump() << '\n';
  for (const cplx& a : state.amplitudes()) {
    put_le_double(os, a.real());
    put_le_double(os, a.imag());
  }
}

QutritState read_state_dump(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ContractError("missing state dump header");
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw ContractError(std::string("invalid state dump header: ") + e.what());
  }
  if (header.value("format", "") != "dimernet-state") throw ContractError("not a dimernet state dump");
  const int n = header.at("node_count").get<int>();
  if (n < 1 || n > kHardNodeLimit) throw ContractError("state dump node count out of range");
  std::vector<cplx> amps(pow3(n));
  for (cplx& a : amps) {
    const double re = get_le_double(is);
    const double im = get_le_double(is);
    a = {re, im};
  }
  StateMeta meta;
  meta.graph_id = header.value("graph", "");
  meta.convention = header.value("convention", kCanonicalOrderConvention);
  meta.defects = parse_defects(header.value("defects", "none"));
  return QutritState::exact(n, std::move(amps), std::move(meta));
}

json to_json(const DensityMatrix& rho) {
  json doc;
  doc["subset"] = rho.subset;
  doc["dim"] = rho.dim();
  json entries = json::array();
  for (Eigen::Index r = 0; r < rho.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.matrix.cols(); ++c) {
      entries.push_back({rho.matrix(r, c).real(), rho.matrix(r, c).imag()});
    }
  }
  doc["matrix_row_major"] = entries;
  return doc;
}

json to_json(const SingleNodeForm& form) {
  return json{{"p1", form.p1}, {"p2", form.p2}, {"residual", form.residual}};
}

json to_json(const TwoNodeForm& form) {
  json doc{{"p1p", form.p1p}, {"p2p", form.p2p}, {"p3p", form.p3p}, {"residual", form.residual}};
  doc["q"] = form.q ? json(*form.q) : json(nullptr);
  return doc;
}

json to_json(const GMEReport& report) {
  json doc{{"bipartitions_checked", report.bipartitions_checked},
           {"min_mixedness", report.min_mixedness},
           {"certified", report.certified},
           {"witness_partition", report.witness_partition},
           {"tolerance", report.tolerance}};
  if (!report.purities.empty()) {
    json list = json::array();
    for (const auto& p : report.purities) list.push_back({{"side", p.side}, {"purity", p.purity}});
    doc["purities"] = list;
  }
  return doc;
}

json to_json(const BoundReport& r) {
  return json{{"p1p", r.p1p},       {"p3p", r.p3p},         {"m", r.m.to_string()},
              {"d", r.d},           {"f_prime", r.f_prime}, {"f_tele_lower", r.f_tele_lower},
              {"f_clo", r.f_clo},   {"q_max", r.q_max},     {"ln_max", r.ln_max},
              {"clamped", r.clamped}};
}

json to_json(const PptResult& ppt) {
  return json{{"is_npt", ppt.is_npt}, {"min_pt_eigenvalue", ppt.min_pt_eigenvalue}};
}

json envelope(const std::string& command, const StateMeta& meta, const json& config) {
  return json{{"schema_version", report_schema_version()},
              {"command", command},
              {"convention", meta.convention},
              {"defect_mode", to_string(meta.defects.mode)},
              {"defects", meta.defects.describe()},
              {"graph", meta.graph_id},
              {"config", config}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace dimernet::io
