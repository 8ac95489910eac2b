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
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dimernet/common.hpp"

namespace dimernet {

/// All randomized checks draw from this engine so a seed pins every result.
using Rng = std::mt19937_64;

using Matrix2c = Eigen::Matrix2cd;

/// Haar-distributed 2x2 unitary: Gaussian matrix, Gram-Schmidt on the
/// columns (QR with a positive R diagonal).
Matrix2c haar_unitary(Rng& rng);

/// max |(U^dagger U - I)_ij|
double unitarity_defect(const Eigen::MatrixXcd& u);

/// Three disjoint node subsets; a and c nonempty, b possibly empty.
struct NodeTriple {
  std::vector<int> a, b, c;
};

/// Each node independently joins a, b, c or none with equal probability;
/// redrawn until a and c are nonempty. Needs node_count >= 2.
NodeTriple random_disjoint_triple(int node_count, Rng& rng);

/// 1 (+) u : identity on the vacancy level, u on the two spin levels.
Eigen::Matrix3cd embed_spin_unitary(const Matrix2c& u);

}  // namespace dimernet
