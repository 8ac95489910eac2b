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

#include "dimernet/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace dimernet {

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
  const int d = dim_a * dim_b;
  if (rho.rows() != d || rho.cols() != d) throw ContractError("partial transpose dimension mismatch");
  Eigen::MatrixXcd out(d, d);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) {
      for (int a2 = 0; a2 < dim_a; ++a2) {
        for (int b2 = 0; b2 < dim_b; ++b2) {
          out(a * dim_b + b, a2 * dim_b + b2) = rho(a * dim_b + b2, a2 * dim_b + b);
        }
      }
    }
  }
  if (std::abs(out.trace() - rho.trace()) > 1e-12) {
    throw std::runtime_error("partial transpose changed the trace");
  }
  if ((out - out.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::runtime_error("partial transpose is not Hermitian");
  }
  return out;
}

namespace {

Eigen::VectorXd pt_spectrum(const DensityMatrix& rho) {
  if (rho.matrix.rows() != 9) throw ContractError("expected a two-node (9x9) density matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(partial_transpose(rho.matrix, 3, 3),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

PptResult ppt_check(const DensityMatrix& rho) {
  const Eigen::VectorXd ev = pt_spectrum(rho);
  PptResult r;
  r.min_pt_eigenvalue = ev.minCoeff();
  r.is_npt = r.min_pt_eigenvalue < -kNptThreshold;
  return r;
}

double log_negativity(const DensityMatrix& rho) {
  const Eigen::VectorXd ev = pt_spectrum(rho);
  if (ev.minCoeff() >= -kNptThreshold) return 0.0;
  return std::max(0.0, std::log2(ev.cwiseAbs().sum()));
}

double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l >= 1e-14) s -= l * std::log2(l);
  }
  return std::max(0.0, s);
}

double entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix, Eigen::EigenvaluesOnly);
  return entropy_of_spectrum(es.eigenvalues());
}

namespace {

// Gram matrix of the smaller side of the cut around `subset`, zero rows and
// columns removed. Empty when the subset is trivial (pure reduced state).
std::optional<Eigen::MatrixXcd> smaller_side_gram(const QutritState& state,
                                                  const std::vector<int>& subset,
                                                  int max_rdm_nodes) {
  const int n = state.node_count();
  const NodeMask mask = nodes_to_mask(subset, n);
  if (mask == 0 || mask == full_mask(n)) return std::nullopt;
  std::vector<int> side = subset;
  if (2 * static_cast<int>(subset.size()) > n) side = mask_to_nodes(full_mask(n) & ~mask);
  if (static_cast<int>(side.size()) > max_rdm_nodes) {
    throw BudgetError("cut with smaller side of " + std::to_string(side.size()) +
                      " nodes exceeds the memory budget of " + std::to_string(max_rdm_nodes));
  }
  CutMatrix m = cut_matrix(state, side).compressed();
  if (m.rows > m.cols) m = m.transposed();
  return row_gram(m);
}

}  // namespace

double subset_entropy(const QutritState& state, const std::vector<int>& subset, int max_rdm_nodes) {
  const auto g = smaller_side_gram(state, subset, max_rdm_nodes);
  if (!g) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(*g, Eigen::EigenvaluesOnly);
  return entropy_of_spectrum(es.eigenvalues());
}

double subset_purity(const QutritState& state, const std::vector<int>& subset, int max_rdm_nodes) {
  const auto g = smaller_side_gram(state, subset, max_rdm_nodes);
  if (!g) return 1.0;
  return g->squaredNorm();
}

double ssa_check(const QutritState& state, const std::vector<int>& a, const std::vector<int>& b,
                 const std::vector<int>& c, int max_rdm_nodes) {
  const int n = state.node_count();
  const NodeMask ma = nodes_to_mask(a, n), mb = nodes_to_mask(b, n), mc = nodes_to_mask(c, n);
  if ((ma & mb) || (mb & mc) || (ma & mc)) throw ContractError("SSA subsets must be disjoint");
  auto s = [&](NodeMask m) { return subset_entropy(state, mask_to_nodes(m), max_rdm_nodes); };
  return s(ma | mb) + s(mb | mc) - s(mb) - s(ma | mb | mc);
}

GMEReport certify_gme(const QutritState& state, const GmeOptions& options) {
  const int n = state.node_count();
  if (n / 2 > options.max_rdm_nodes) {
    throw BudgetError("bipartition scan on " + std::to_string(n) +
                      " nodes needs cuts larger than the memory budget");
  }
  GMEReport report;
  report.tolerance = options.tolerance;
  double max_purity = -1.0;
  // Subsets of nodes 0..n-2; node n-1 always sits on the other side.
  const NodeMask last = NodeMask{1} << (n - 1);
  for (NodeMask s = 1; s < last; ++s) {
    NodeMask side = s;
    if (2 * popcount(s) > n) side = full_mask(n) & ~s;
    const std::vector<int> nodes = mask_to_nodes(side);
    const double purity = subset_purity(state, nodes, options.max_rdm_nodes);
    ++report.bipartitions_checked;
    if (purity > max_purity) {
      max_purity = purity;
      report.witness_partition = nodes;
    }
    if (options.record_purities) report.purities.push_back({nodes, purity});
  }
  if (report.bipartitions_checked == 0) {
    // A single node has no bipartition to be entangled across.
    report.min_mixedness = 0.0;
    report.certified = false;
    return report;
  }
  report.min_mixedness = 1.0 - max_purity;
  report.certified = report.min_mixedness > options.tolerance;
  return report;
}

}  // namespace dimernet
