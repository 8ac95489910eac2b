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

#include "dimernet/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <sstream>

namespace dimernet {

int default_node_budget() {
  if (const char* env = std::getenv("DIMERNET_MAX_NODES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kHardNodeLimit) return static_cast<int>(v);
  }
  return kDefaultMaxNodes;
}

std::vector<int> mask_to_nodes(NodeMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(__builtin_ctz(m));
    m &= m - 1;
  }
  return out;
}

NodeMask nodes_to_mask(const std::vector<int>& nodes, int node_count) {
  NodeMask m = 0;
  for (int v : nodes) {
    if (v < 0 || v >= node_count) {
      throw ContractError("node index " + std::to_string(v) + " out of range [0, " +
                          std::to_string(node_count) + ")");
    }
    if ((m >> v) & 1u) throw ContractError("duplicate node index " + std::to_string(v));
    m |= NodeMask{1} << v;
  }
  return m;
}

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::chain_pbc: return "chain_pbc";
    case LatticeKind::square_pbc: return "square_pbc";
    case LatticeKind::complete: return "complete";
    case LatticeKind::custom: return "custom";
  }
  return "custom";
}

LatticeKind lattice_kind_from_string(const std::string& name) {
  if (name == "chain_pbc" || name == "chain") return LatticeKind::chain_pbc;
  if (name == "square_pbc" || name == "square") return LatticeKind::square_pbc;
  if (name == "complete") return LatticeKind::complete;
  if (name == "custom") return LatticeKind::custom;
  throw LatticeSpecError("unknown lattice kind '" + name + "'");
}

LatticeGraph LatticeGraph::from_edges(int node_count, const std::vector<Edge>& edges,
                                      LatticeKind kind,
                                      std::vector<std::vector<int>> coordinates,
                                      std::vector<int> dims) {
  if (node_count < 1) throw ContractError("lattice needs at least one node");
  if (node_count > kHardNodeLimit) {
    throw BudgetError("node count " + std::to_string(node_count) + " exceeds hard limit " +
                      std::to_string(kHardNodeLimit));
  }
  if (!coordinates.empty() && static_cast<int>(coordinates.size()) != node_count) {
    throw ContractError("coordinate list length differs from node count");
  }
  LatticeGraph g;
  g.node_count_ = node_count;
  g.kind_ = kind;
  g.dims_ = std::move(dims);
  g.coordinates_ = std::move(coordinates);
  g.adjacency_.assign(node_count, 0);
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
      throw ContractError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") has an endpoint outside [0, " + std::to_string(node_count) + ")");
    }
    if (a == b) throw ContractError("self-loop at node " + std::to_string(a));
    const Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) {
      throw ContractError("duplicate edge (" + std::to_string(e.first) + "," +
                          std::to_string(e.second) + ")");
    }
    g.adjacency_[a] |= NodeMask{1} << b;
    g.adjacency_[b] |= NodeMask{1} << a;
  }
  g.edges_.assign(seen.begin(), seen.end());
  return g;
}

bool LatticeGraph::is_regular() const {
  for (int v = 1; v < node_count_; ++v) {
    if (degree(v) != degree(0)) return false;
  }
  return true;
}

int LatticeGraph::distance(int a, int b) const {
  if (a == b) return 0;
  std::vector<int> dist(node_count_, -1);
  std::queue<int> frontier;
  dist[a] = 0;
  frontier.push(a);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : mask_to_nodes(adjacency_[v])) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      if (w == b) return dist[w];
      frontier.push(w);
    }
  }
  return -1;
}

std::map<int, std::vector<int>> LatticeGraph::distance_classes(int reference) const {
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < node_count_; ++v) {
    if (v == reference) continue;
    classes[distance(reference, v)].push_back(v);
  }
  return classes;
}

std::string LatticeGraph::id() const {
  std::ostringstream os;
  os << to_string(kind_) << ':';
  if (kind_ == LatticeKind::custom) {
    os << node_count_ << '/' << edges_.size();
  } else {
    for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "x" : "") << dims_[i];
  }
  return os.str();
}

namespace {

void check_budget(int nodes, int max_nodes) {
  if (nodes > max_nodes) {
    throw BudgetError("lattice has " + std::to_string(nodes) + " nodes, budget is " +
                      std::to_string(max_nodes));
  }
}

}  // namespace

LatticeGraph build_lattice(LatticeKind kind, const std::vector<int>& dims, int max_nodes) {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> coords;
  switch (kind) {
    case LatticeKind::chain_pbc: {
      if (dims.size() != 1) throw ContractError("chain_pbc takes one dimension");
      const int length = dims[0];
      if (length < 3) {
        throw ContractError("chain_pbc of length " + std::to_string(length) +
                            " would duplicate its wrap-around edge (need >= 3)");
      }
      check_budget(length, max_nodes);
      for (int i = 0; i < length; ++i) {
        edges.emplace_back(i, (i + 1) % length);
        coords.push_back({i});
      }
      return LatticeGraph::from_edges(length, edges, kind, std::move(coords), dims);
    }
    case LatticeKind::square_pbc: {
      if (dims.size() != 2) throw ContractError("square_pbc takes two dimensions");
      const int lx = dims[0], ly = dims[1];
      if (lx < 2 || ly < 2) throw ContractError("square_pbc dimensions must be >= 2");
      if (lx == 2 && ly == 2) {
        throw ContractError("square_pbc 2x2: periodic wrap edges coincide with direct edges");
      }
      check_budget(lx * ly, max_nodes);
      auto index = [lx](int x, int y) { return y * lx + x; };
      for (int y = 0; y < ly; ++y) {
        for (int x = 0; x < lx; ++x) {
          coords.push_back({x, y});
          if (lx > 2 || x == 0) edges.emplace_back(index(x, y), index((x + 1) % lx, y));
          if (ly > 2 || y == 0) edges.emplace_back(index(x, y), index(x, (y + 1) % ly));
        }
      }
      return LatticeGraph::from_edges(lx * ly, edges, kind, std::move(coords), dims);
    }
    case LatticeKind::complete: {
      if (dims.size() != 1) throw ContractError("complete takes one dimension");
      const int n = dims[0];
      if (n < 2) throw ContractError("complete graph needs at least 2 nodes");
      check_budget(n, max_nodes);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
      return LatticeGraph::from_edges(n, edges, kind, {}, dims);
    }
    case LatticeKind::custom:
      throw ContractError("custom lattices are built from an edge list");
  }
  throw ContractError("unknown lattice kind");
}

std::string to_string(DefectMode mode) {
  return mode == DefectMode::fixed ? "fixed" : "symmetric";
}

DefectPattern DefectPattern::fixed(std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  DefectPattern p;
  p.mode = DefectMode::fixed;
  p.defect_count = static_cast<int>(nodes.size());
  p.defect_nodes = std::move(nodes);
  return p;
}

DefectPattern DefectPattern::symmetric(int count) {
  if (count < 0) throw ContractError("defect count must be non-negative");
  DefectPattern p;
  p.mode = DefectMode::symmetric;
  p.defect_count = count;
  return p;
}

void DefectPattern::validate(const LatticeGraph& graph) const {
  const int n = graph.node_count();
  if (mode == DefectMode::fixed) {
    nodes_to_mask(defect_nodes, n);
    if (static_cast<int>(defect_nodes.size()) != defect_count) {
      throw ContractError("fixed defect list size differs from defect count");
    }
  }
  if (defect_count < 0 || defect_count > n) {
    throw ContractError("defect count " + std::to_string(defect_count) + " outside [0, " +
                        std::to_string(n) + "]");
  }
  if ((n - defect_count) % 2 != 0) {
    throw ContractError("odd number of occupied nodes (" + std::to_string(n - defect_count) +
                        "); no dimer covering can exist");
  }
}

std::string DefectPattern::describe() const {
  if (mode == DefectMode::symmetric) return "sym:" + std::to_string(defect_count);
  std::string s = "fixed:";
  for (std::size_t i = 0; i < defect_nodes.size(); ++i) {
    s += (i ? "," : "") + std::to_string(defect_nodes[i]);
  }
  return s;
}

double defect_density(const DefectPattern& pattern, const LatticeGraph& graph) {
  pattern.validate(graph);
  return static_cast<double>(pattern.defect_count) / graph.node_count();
}

}  // namespace dimernet
