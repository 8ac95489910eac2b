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

#include "dimernet/matchings.hpp"

namespace dimernet {
namespace {

void check_occupied(const LatticeGraph& graph, NodeMask occupied) {
  if (occupied & ~full_mask(graph.node_count())) {
    throw ContractError("occupied set contains nodes outside the graph");
  }
  if (popcount(occupied) % 2 != 0) {
    throw ContractError("odd occupied node count " + std::to_string(popcount(occupied)));
  }
}

// Always pair the lowest uncovered node, so each matching is reached by
// exactly one path and neighbors are tried in increasing order.
void enumerate(const LatticeGraph& graph, NodeMask remaining, std::vector<Edge>& stack,
               std::vector<DimerCovering>& out, NodeMask occupied) {
  if (remaining == 0) {
    out.push_back({stack, occupied});
    return;
  }
  const int low = __builtin_ctz(remaining);
  NodeMask candidates = graph.neighbors(low) & remaining;
  while (candidates) {
    const int partner = __builtin_ctz(candidates);
    candidates &= candidates - 1;
    stack.emplace_back(low, partner);
    enumerate(graph, remaining & ~(NodeMask{1} << low) & ~(NodeMask{1} << partner), stack, out,
              occupied);
    stack.pop_back();
  }
}

std::uint64_t count(const LatticeGraph& graph, NodeMask remaining) {
  if (remaining == 0) return 1;
  const int low = __builtin_ctz(remaining);
  NodeMask candidates = graph.neighbors(low) & remaining;
  std::uint64_t total = 0;
  while (candidates) {
    const int partner = __builtin_ctz(candidates);
    candidates &= candidates - 1;
    total += count(graph, remaining & ~(NodeMask{1} << low) & ~(NodeMask{1} << partner));
  }
  return total;
}

}  // namespace

CoveringList enumerate_coverings(const LatticeGraph& graph, NodeMask occupied) {
  check_occupied(graph, occupied);
  CoveringList result;
  std::vector<Edge> stack;
  stack.reserve(popcount(occupied) / 2);
  enumerate(graph, occupied, stack, result.coverings, occupied);
  return result;
}

std::uint64_t count_coverings(const LatticeGraph& graph, NodeMask occupied) {
  check_occupied(graph, occupied);
  return count(graph, occupied);
}

void validate_covering(const LatticeGraph& graph, const DimerCovering& covering) {
  NodeMask seen = 0;
  for (auto [a, b] : covering.pairs) {
    if (a >= b) throw ContractError("covering pair not in (low, high) order");
    if (!graph.has_edge(a, b)) throw ContractError("covering pair is not a graph edge");
    const NodeMask pair = (NodeMask{1} << a) | (NodeMask{1} << b);
    if (seen & pair) throw ContractError("covering pairs overlap");
    seen |= pair;
  }
  if (seen != covering.covered) throw ContractError("covered set differs from union of pairs");
}

}  // namespace dimernet
