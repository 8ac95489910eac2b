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

#include <vector>

#include <Eigen/Dense>

#include "dimernet/rdm.hpp"
#include "dimernet/state.hpp"

namespace dimernet {

/// Transpose of the second tensor factor of a (dim_a * dim_b)-square matrix.
/// Throws std::runtime_error if trace or Hermiticity is not preserved.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int dim_a, int dim_b);

struct PptResult {
  bool is_npt = false;
  double min_pt_eigenvalue = 0.0;
};

inline constexpr double kNptThreshold = 1e-12;

PptResult ppt_check(const DensityMatrix& rho);

/// log2 || rho^{T_B} ||_1, exactly 0 when ppt_check reports PPT.
double log_negativity(const DensityMatrix& rho);

/// -sum lambda log2 lambda, eigenvalues below 1e-14 dropped.
double entropy(const DensityMatrix& rho);
double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues);

/// Entropy / purity of the reduced state on `subset`, computed on whichever
/// side of the cut is smaller. Empty subset (or the full set) gives a pure
/// reduced state. Throws BudgetError if the smaller side exceeds max_rdm_nodes.
double subset_entropy(const QutritState& state, const std::vector<int>& subset,
                      int max_rdm_nodes = kDefaultMaxRdmNodes);
double subset_purity(const QutritState& state, const std::vector<int>& subset,
                     int max_rdm_nodes = kDefaultMaxRdmNodes);

/// S(ab) + S(bc) - S(b) - S(abc); non-negative up to rounding.
double ssa_check(const QutritState& state, const std::vector<int>& a, const std::vector<int>& b,
                 const std::vector<int>& c, int max_rdm_nodes = kDefaultMaxRdmNodes);

inline constexpr double kDefaultGmeTolerance = 1e-8;

struct PartitionPurity {
  std::vector<int> side;  // smaller side of the cut
  double purity = 0.0;
};

struct GMEReport {
  int bipartitions_checked = 0;
  double min_mixedness = 0.0;  // 1 - max purity
  bool certified = false;
  std::vector<int> witness_partition;
  double tolerance = kDefaultGmeTolerance;
  std::vector<PartitionPurity> purities;  // filled when requested
};

struct GmeOptions {
  double tolerance = kDefaultGmeTolerance;
  bool record_purities = false;
  int max_rdm_nodes = kDefaultMaxRdmNodes;
};

/// Scans all 2^(N-1) - 1 bipartitions; certified iff every reduced purity is
/// at most 1 - tolerance.
GMEReport certify_gme(const QutritState& state, const GmeOptions& options = {});

}  // namespace dimernet
