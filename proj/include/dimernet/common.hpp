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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimernet {

using cplx = std::complex<double>;

/// Bit i set means node i belongs to the set.
using NodeMask = std::uint32_t;

/// Hard ceiling imposed by the NodeMask width and dense 3^N storage.
inline constexpr int kHardNodeLimit = 20;
inline constexpr int kDefaultMaxNodes = 12;
/// Largest subset whose dense 3^x by 3^x density matrix we will build.
inline constexpr int kDefaultMaxRdmNodes = 6;

/// Violated precondition or malformed input.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed lattice description (JSON or inline form).
class LatticeSpecError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Node or memory budget exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The graph admits no dimer covering for the requested defects.
class NoCoveringError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Node budget in effect: DIMERNET_MAX_NODES if set and valid, else 12.
int default_node_budget();

constexpr std::size_t pow3(int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

inline int popcount(NodeMask m) { return __builtin_popcount(m); }

inline NodeMask full_mask(int n) {
  return n >= 32 ? ~NodeMask{0} : ((NodeMask{1} << n) - 1);
}

std::vector<int> mask_to_nodes(NodeMask m);
NodeMask nodes_to_mask(const std::vector<int>& nodes, int node_count);

}  // namespace dimernet
