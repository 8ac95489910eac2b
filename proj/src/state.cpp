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

#include "dimernet/state.hpp"

#include <cmath>
#include <numeric>

#include "dimernet/kernels.hpp"
#include "dimernet/matchings.hpp"

namespace dimernet {

QutritState QutritState::normalized(int node_count, std::vector<cplx> amplitudes, StateMeta meta) {
  if (node_count < 1 || node_count > kHardNodeLimit) {
    throw ContractError("state node count out of range");
  }
  if (amplitudes.size() != pow3(node_count)) {
    throw ContractError("amplitude vector length " + std::to_string(amplitudes.size()) +
                        " is not 3^" + std::to_string(node_count));
  }
  const double nrm = std::sqrt(kernels::norm_sq(amplitudes));
  if (!(nrm > 1e-300) || !std::isfinite(nrm)) {
    throw ContractError("cannot normalize a zero or non-finite state vector");
  }
  kernels::scale(cplx(1.0 / nrm, 0.0), amplitudes);
  QutritState s;
  s.node_count_ = node_count;
  s.amplitudes_ = std::move(amplitudes);
  s.meta_ = std::move(meta);
  return s;
}

QutritState QutritState::exact(int node_count, std::vector<cplx> amplitudes, StateMeta meta) {
  if (node_count < 1 || node_count > kHardNodeLimit) {
    throw ContractError("state node count out of range");
  }
  if (amplitudes.size() != pow3(node_count)) {
    throw ContractError("amplitude vector length " + std::to_string(amplitudes.size()) +
                        " is not 3^" + std::to_string(node_count));
  }
  const double nrm = std::sqrt(kernels::norm_sq(amplitudes));
  if (!(std::abs(nrm - 1.0) <= 1e-10)) throw ContractError("state vector is not normalized");
  QutritState s;
  s.node_count_ = node_count;
  s.amplitudes_ = std::move(amplitudes);
  s.meta_ = std::move(meta);
  return s;
}

std::vector<int> QutritState::node_order() const {
  std::vector<int> order(node_count_);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

double QutritState::norm() const { return std::sqrt(kernels::norm_sq(amplitudes_)); }

DimerTerms dimer_amplitudes(int i, int j) {
  if (i == j) throw ContractError("dimer endpoints must differ");
  const double h = 1.0 / std::sqrt(2.0);
  return {{std::min(i, j), std::max(i, j)},
          {DimerTerm{kSpinUp, kSpinDown, h}, DimerTerm{kSpinDown, kSpinUp, -h}}};
}

namespace {

// Adds the 2^k product terms of one covering into `amps`.
void add_covering(const DimerCovering& covering, int node_count, std::vector<cplx>& amps) {
  const std::size_t k = covering.pairs.size();
  struct Slot {
    std::size_t stride_first, stride_second;
    std::array<DimerTerm, 2> terms;
  };
  std::vector<Slot> slots;
  slots.reserve(k);
  for (auto [a, b] : covering.pairs) {
    const DimerTerms d = dimer_amplitudes(a, b);
    slots.push_back({pow3(node_count - 1 - d.pair.first), pow3(node_count - 1 - d.pair.second),
                     d.terms});
  }
  const std::size_t combos = std::size_t{1} << k;
  for (std::size_t choice = 0; choice < combos; ++choice) {
    std::size_t index = 0;
    double amp = 1.0;
    for (std::size_t s = 0; s < k; ++s) {
      const DimerTerm& t = slots[s].terms[(choice >> s) & 1u];
      index += t.first_level * slots[s].stride_first + t.second_level * slots[s].stride_second;
      amp *= t.amplitude;
    }
    amps[index] += amp;
  }
}

// All `count`-subsets of [0, n) as masks, in lexicographic order of the
// sorted node lists.
void subsets_of_size(int n, int count, int start, NodeMask current, std::vector<NodeMask>& out) {
  if (count == 0) {
    out.push_back(current);
    return;
  }
  for (int v = start; v <= n - count; ++v) {
    subsets_of_size(n, count - 1, v + 1, current | (NodeMask{1} << v), out);
  }
}

}  // namespace

QutritState build_state(const LatticeGraph& graph, const DefectPattern& pattern, int max_nodes) {
  const int n = graph.node_count();
  if (n > max_nodes) {
    throw BudgetError("state on " + std::to_string(n) + " nodes exceeds node budget " +
                      std::to_string(max_nodes));
  }
  pattern.validate(graph);

  std::vector<NodeMask> placements;
  if (pattern.mode == DefectMode::fixed) {
    placements.push_back(nodes_to_mask(pattern.defect_nodes, n));
  } else {
    subsets_of_size(n, pattern.defect_count, 0, 0, placements);
  }

  std::vector<cplx> amps(pow3(n));
  std::size_t coverings_used = 0;
  for (NodeMask defects : placements) {
    const CoveringList list = enumerate_coverings(graph, full_mask(n) & ~defects);
    for (const DimerCovering& c : list.coverings) add_covering(c, n, amps);
    coverings_used += list.size();
  }
  if (coverings_used == 0) {
    throw NoCoveringError("graph " + graph.id() + " admits no dimer covering for defects " +
                          pattern.describe());
  }
  if (kernels::norm_sq(amps) < 1e-24) {
    throw NoCoveringError("coverings cancel exactly; the superposition vanishes");
  }
  return QutritState::normalized(n, std::move(amps), StateMeta{graph.id(), pattern});
}

QutritState apply_local_gate(const QutritState& state, const Eigen::Matrix3cd& g) {
  std::array<cplx, 9> row_major;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) row_major[3 * r + c] = g(r, c);
  }
  std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
  const int n = state.node_count();
  for (int node = 0; node < n; ++node) {
    const std::size_t s = state.stride(node);
    const std::size_t blocks = pow3(node);
    for (std::size_t b = 0; b < blocks; ++b) {
      cplx* base = amps.data() + b * 3 * s;
      kernels::gate3(row_major.data(), {base, s}, {base + s, s}, {base + 2 * s, s});
    }
  }
  return QutritState::normalized(n, std::move(amps), state.meta());
}

QutritState apply_local_unitary(const QutritState& state, const Matrix2c& u) {
  if (unitarity_defect(u) > 1e-12) throw ContractError("local operator is not unitary");
  return apply_local_gate(state, embed_spin_unitary(u));
}

double fidelity(const QutritState& a, const QutritState& b) {
  if (a.node_count() != b.node_count()) throw ContractError("fidelity of states on different node counts");
  return std::abs(kernels::dot_conj(a.amplitudes(), b.amplitudes()));
}

}  // namespace dimernet
