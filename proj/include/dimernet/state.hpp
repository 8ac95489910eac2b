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

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dimernet/lattice.hpp"
#include "dimernet/random.hpp"

namespace dimernet {

/// Per-node levels: 0 = vacancy, 1 = spin up, 2 = spin down.
inline constexpr int kVacancy = 0;
inline constexpr int kSpinUp = 1;
inline constexpr int kSpinDown = 2;

/// Every dimer is written with its lower global node index first and every
/// covering enters the superposition with coefficient +1.
inline constexpr const char* kCanonicalOrderConvention = "canonical-order";

struct StateMeta {
  std::string graph_id;
  DefectPattern defects;
  std::string convention = kCanonicalOrderConvention;
};

/// Normalized state over the 3^N qutrit product basis. Node 0 is the most
/// significant base-3 digit of the basis index, node N-1 the least.
class QutritState {
 public:
  /// Takes ownership of `amplitudes` (size 3^N) and rescales to unit norm.
  /// Throws ContractError on a size mismatch or a zero vector.
  static QutritState normalized(int node_count, std::vector<cplx> amplitudes, StateMeta meta = {});
  /// Keeps the amplitudes bit-for-bit; the norm must already be 1 within 1e-10.
  static QutritState exact(int node_count, std::vector<cplx> amplitudes, StateMeta meta = {});

  int node_count() const { return node_count_; }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  /// Identity order 0..N-1; kept explicit for dumps.
  std::vector<int> node_order() const;
  const StateMeta& meta() const { return meta_; }

  std::size_t stride(int node) const { return pow3(node_count_ - 1 - node); }
  int level(std::size_t index, int node) const {
    return static_cast<int>((index / stride(node)) % 3);
  }
  double norm() const;

 private:
  QutritState() = default;

  int node_count_ = 0;
  std::vector<cplx> amplitudes_;
  StateMeta meta_;
};

struct DimerTerm {
  int first_level;   // level of the lower-index node
  int second_level;  // level of the higher-index node
  double amplitude;
};

/// The two product terms of the singlet on (i, j) in canonical order.
struct DimerTerms {
  Edge pair;  // (min, max)
  std::array<DimerTerm, 2> terms;
};

DimerTerms dimer_amplitudes(int i, int j);

/// Equal-weight coherent superposition of dimer coverings. Fixed mode covers
/// the complement of the given defect nodes; symmetric mode additionally
/// sums over every placement of P defects.
QutritState build_state(const LatticeGraph& graph, const DefectPattern& pattern,
                        int max_nodes = default_node_budget());

/// Applies g to every node.
QutritState apply_local_gate(const QutritState& state, const Eigen::Matrix3cd& g);

/// Applies (1 (+) u) to every node. Throws ContractError if u is not unitary
/// to 1e-12.
QutritState apply_local_unitary(const QutritState& state, const Matrix2c& u);

/// |<a|b>|
double fidelity(const QutritState& a, const QutritState& b);

}  // namespace dimernet
