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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimernet/common.hpp"

namespace dimernet {

enum class LatticeKind { chain_pbc, square_pbc, complete, custom };

std::string to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(const std::string& name);

using Edge = std::pair<int, int>;

/// Undirected simple graph hosting the network. Edges are stored with
/// first < second, sorted; adjacency is kept as node bitmasks.
class LatticeGraph {
 public:
  /// Validates and normalizes an arbitrary edge list. Rejects self-loops,
  /// duplicates (in either orientation) and out-of-range endpoints.
  static LatticeGraph from_edges(int node_count, const std::vector<Edge>& edges,
                                 LatticeKind kind = LatticeKind::custom,
                                 std::vector<std::vector<int>> coordinates = {},
                                 std::vector<int> dims = {});

  int node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  LatticeKind kind() const { return kind_; }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<std::vector<int>>& coordinates() const { return coordinates_; }

  NodeMask neighbors(int node) const { return adjacency_[node]; }
  bool has_edge(int a, int b) const { return (adjacency_[a] >> b) & 1u; }
  int degree(int node) const { return popcount(adjacency_[node]); }
  bool is_regular() const;

  /// Hop distance; -1 when unreachable.
  int distance(int a, int b) const;
  /// Nodes grouped by hop distance from `reference` (distance 0 excluded).
  std::map<int, std::vector<int>> distance_classes(int reference) const;

  /// Short human-readable id, e.g. "chain_pbc:6" or "custom:5/4".
  std::string id() const;

 private:
  LatticeGraph() = default;

  int node_count_ = 0;
  LatticeKind kind_ = LatticeKind::custom;
  std::vector<int> dims_;
  std::vector<Edge> edges_;
  std::vector<NodeMask> adjacency_;
  std::vector<std::vector<int>> coordinates_;
};

/// chain_pbc: dims = {L}, L >= 3.
/// square_pbc: dims = {Lx, Ly}, each >= 2 but not both 2; a side of length 2
///   has a single rung in that direction (its wrap edge coincides with it).
/// complete: dims = {N}, N >= 2.
LatticeGraph build_lattice(LatticeKind kind, const std::vector<int>& dims,
                           int max_nodes = default_node_budget());

enum class DefectMode { fixed, symmetric };

std::string to_string(DefectMode mode);

struct DefectPattern {
  DefectMode mode = DefectMode::symmetric;
  std::vector<int> defect_nodes;  // fixed mode only, sorted
  int defect_count = 0;

  static DefectPattern fixed(std::vector<int> nodes);
  static DefectPattern symmetric(int count);
  static DefectPattern none() { return symmetric(0); }

  /// Throws ContractError if the pattern does not fit `graph` or leaves an
  /// odd number of occupied nodes.
  void validate(const LatticeGraph& graph) const;

  /// "sym:2" / "fixed:0,3"
  std::string describe() const;
};

double defect_density(const DefectPattern& pattern, const LatticeGraph& graph);

}  // namespace dimernet
