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

#include <cstdint>
#include <vector>

#include "dimernet/lattice.hpp"

namespace dimernet {

/// A perfect matching of an occupied node set. Pairs are (low, high), sorted.
struct DimerCovering {
  std::vector<Edge> pairs;
  NodeMask covered = 0;

  bool operator==(const DimerCovering&) const = default;
  auto operator<=>(const DimerCovering& other) const { return pairs <=> other.pairs; }
};

/// Result of an enumeration. An empty list is a legitimate answer (the
/// subgraph admits no covering); callers that need a covering check
/// admits_covering().
struct CoveringList {
  std::vector<DimerCovering> coverings;

  bool admits_covering() const { return !coverings.empty(); }
  std::size_t size() const { return coverings.size(); }
};

/// Every perfect matching of the subgraph induced on `occupied`, each once,
/// in lexicographic order of the sorted pair list. An empty `occupied` set
/// yields the single empty covering.
CoveringList enumerate_coverings(const LatticeGraph& graph, NodeMask occupied);

std::uint64_t count_coverings(const LatticeGraph& graph, NodeMask occupied);

/// Throws ContractError when the covering breaks its invariants on `graph`.
void validate_covering(const LatticeGraph& graph, const DimerCovering& covering);

}  // namespace dimernet
