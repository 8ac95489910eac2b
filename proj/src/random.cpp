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

#include "dimernet/random.hpp"

namespace dimernet {

Matrix2c haar_unitary(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix2c z;
  for (int c = 0; c < 2; ++c) {
    for (int r = 0; r < 2; ++r) z(r, c) = cplx(gauss(rng), gauss(rng));
  }
  Eigen::Vector2cd c0 = z.col(0).normalized();
  Eigen::Vector2cd c1 = z.col(1) - c0 * c0.dot(z.col(1));
  c1.normalize();
  Matrix2c u;
  u.col(0) = c0;
  u.col(1) = c1;
  return u;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

NodeTriple random_disjoint_triple(int node_count, Rng& rng) {
  if (node_count < 2) throw ContractError("a disjoint triple needs at least two nodes");
  std::uniform_int_distribution<int> label(0, 3);
  for (;;) {
    NodeTriple t;
    for (int v = 0; v < node_count; ++v) {
      switch (label(rng)) {
        case 1: t.a.push_back(v); break;
        case 2: t.b.push_back(v); break;
        case 3: t.c.push_back(v); break;
        default: break;
      }
    }
    if (!t.a.empty() && !t.c.empty()) return t;
  }
}

Eigen::Matrix3cd embed_spin_unitary(const Matrix2c& u) {
  Eigen::Matrix3cd g = Eigen::Matrix3cd::Zero();
  g(0, 0) = 1.0;
  g.block<2, 2>(1, 1) = u;
  return g;
}

}  // namespace dimernet
