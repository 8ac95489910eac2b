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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "dimernet/random.hpp"
#include "dimernet/state.hpp"

namespace dimernet {

/// Reduced state on `subset`, basis ordered like the subset list (first node
/// is the most significant digit).
struct DensityMatrix {
  Eigen::MatrixXcd matrix;
  std::vector<int> subset;

  int dim() const { return static_cast<int>(matrix.rows()); }
  /// Hermitian to 1e-12, unit trace to 1e-12, smallest eigenvalue >= -1e-10.
  /// Throws std::runtime_error naming the broken invariant.
  void validate() const;
};

/// The state amplitudes reshaped over a cut: rows index configurations of
/// `keep` (in list order), columns configurations of the remaining nodes
/// (ascending). Row-major.
struct CutMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;

  std::span<const cplx> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
  CutMatrix transposed() const;
  /// Drops rows and columns that are identically zero. Leaves the nonzero
  /// spectrum of M M^dagger unchanged.
  CutMatrix compressed() const;
};

CutMatrix cut_matrix(const QutritState& state, const std::vector<int>& keep);

/// M M^dagger for the rows of `m`.
Eigen::MatrixXcd row_gram(const CutMatrix& m);

/// rho = Tr_{rest} |psi><psi|. Throws BudgetError when |keep| > max_rdm_nodes.
DensityMatrix partial_trace(const QutritState& state, const std::vector<int>& keep,
                            int max_rdm_nodes = kDefaultMaxRdmNodes);

/// g^{(x) x}
Eigen::MatrixXcd kron_power(const Eigen::Matrix3cd& g, int copies);

/// Largest Frobenius deviation || U rho U^dagger - rho ||, U = (1 (+) u)^{(x) x},
/// over `trials` Haar-random u.
double verify_lemma(const DensityMatrix& rho, int trials, Rng& rng);
double verify_lemma(const QutritState& state, const std::vector<int>& keep, int trials, Rng& rng);

/// The 24 single-qubit Cliffords, one representative per global phase.
const std::vector<Matrix2c>& clifford_group();

/// Exact average of (1 (+) u) (x) (1 (+) u) rho (.)^dagger over u in the
/// Clifford group times the phases {1, i, -1, -i}. Equal to the Haar average.
DensityMatrix twirl(const DensityMatrix& rho);

struct SingleNodeForm {
  double p1 = 0.0;
  double p2 = 0.0;
  double residual = 0.0;
};

struct TwoNodeForm {
  double p1p = 0.0;
  double p2p = 0.0;
  double p3p = 0.0;
  /// Empty when p3p < 1e-12: the Werner block carries no weight.
  std::optional<double> q;
  double residual = 0.0;
};

inline constexpr double kUndefinedQThreshold = 1e-12;

/// diag(p1, p2/2, p2/2), p2 = 1 - p1
Eigen::MatrixXcd single_node_matrix(double p1);

/// p1' |00><00| + p2' I'_4/4 + p3' W(q), 9x9, node a the major digit.
Eigen::MatrixXcd two_node_matrix(double p1p, double p2p, double p3p, double q);

SingleNodeForm fit_single(const DensityMatrix& rho);
TwoNodeForm fit_two(const DensityMatrix& rho);

}  // namespace dimernet
