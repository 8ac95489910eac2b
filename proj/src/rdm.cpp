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

#include "dimernet/rdm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <Eigen/Eigenvalues>

#include "dimernet/kernels.hpp"

namespace dimernet {

void DensityMatrix::validate() const {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw std::runtime_error("density matrix is not square");
  }
  const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) throw std::runtime_error("density matrix not Hermitian");
  if (std::abs(matrix.trace() - cplx(1.0, 0.0)) > 1e-12) {
    throw std::runtime_error("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::runtime_error("density matrix has a negative eigenvalue");
  }
}

CutMatrix CutMatrix::transposed() const {
  CutMatrix t;
  t.rows = cols;
  t.cols = rows;
  t.data.resize(data.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) t.data[c * rows + r] = data[r * cols + c];
  }
  return t;
}

CutMatrix CutMatrix::compressed() const {
  std::vector<std::size_t> live_rows, live_cols;
  std::vector<char> col_live(cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    bool any = false;
    for (std::size_t c = 0; c < cols; ++c) {
      if (data[r * cols + c] != cplx(0.0, 0.0)) {
        any = true;
        col_live[c] = 1;
      }
    }
    if (any) live_rows.push_back(r);
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (col_live[c]) live_cols.push_back(c);
  }
  CutMatrix out;
  out.rows = live_rows.size();
  out.cols = live_cols.size();
  out.data.reserve(out.rows * out.cols);
  for (std::size_t r : live_rows) {
    for (std::size_t c : live_cols) out.data.push_back(data[r * cols + c]);
  }
  return out;
}

CutMatrix cut_matrix(const QutritState& state, const std::vector<int>& keep) {
  const int n = state.node_count();
  const NodeMask keep_mask = nodes_to_mask(keep, n);
  const int x = static_cast<int>(keep.size());

  // Weight of each node's digit in the row (kept) or column (traced) index.
  std::vector<std::size_t> row_weight(n, 0), col_weight(n, 0);
  for (int p = 0; p < x; ++p) row_weight[keep[p]] = pow3(x - 1 - p);
  int env_pos = n - x;
  for (int v = 0; v < n; ++v) {
    if (!((keep_mask >> v) & 1u)) col_weight[v] = pow3(--env_pos);
  }

  CutMatrix m;
  m.rows = pow3(x);
  m.cols = pow3(n - x);
  m.data.assign(m.rows * m.cols, cplx(0.0, 0.0));

  const auto amps = state.amplitudes();
  std::vector<int> digits(n, 0);  // odometer over the full index, node n-1 fastest
  std::size_t r = 0, c = 0;
  for (std::size_t index = 0; index < amps.size(); ++index) {
    m.data[r * m.cols + c] = amps[index];
    for (int v = n - 1; v >= 0; --v) {
      if (digits[v] < 2) {
        ++digits[v];
        r += row_weight[v];
        c += col_weight[v];
        break;
      }
      digits[v] = 0;
      r -= 2 * row_weight[v];
      c -= 2 * col_weight[v];
    }
  }
  return m;
}

Eigen::MatrixXcd row_gram(const CutMatrix& m) {
  Eigen::MatrixXcd g(m.rows, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = i; j < m.rows; ++j) {
      // (M M^dagger)_ij = sum_e M_ie conj(M_je)
      const cplx v = kernels::dot_conj(m.row(j), m.row(i));
      g(i, j) = v;
      g(j, i) = std::conj(v);
    }
    g(i, i) = cplx(g(i, i).real(), 0.0);
  }
  return g;
}

DensityMatrix partial_trace(const QutritState& state, const std::vector<int>& keep,
                            int max_rdm_nodes) {
  if (keep.empty()) throw ContractError("partial trace needs a nonempty keep set");
  if (static_cast<int>(keep.size()) > max_rdm_nodes) {
    throw BudgetError("reduced state on " + std::to_string(keep.size()) +
                      " nodes exceeds the memory budget of " + std::to_string(max_rdm_nodes));
  }
  DensityMatrix rho{row_gram(cut_matrix(state, keep)), keep};
  rho.validate();
  return rho;
}

Eigen::MatrixXcd kron_power(const Eigen::Matrix3cd& g, int copies) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = 0; k < copies; ++k) {
    Eigen::MatrixXcd next(out.rows() * 3, out.cols() * 3);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block<3, 3>(3 * r, 3 * c) = out(r, c) * g;
    }
    out = std::move(next);
  }
  return out;
}

namespace {

int subset_size_for_dim(Eigen::Index dim) {
  int x = 0;
  std::size_t d = 1;
  while (d < static_cast<std::size_t>(dim)) {
    d *= 3;
    ++x;
  }
  if (d != static_cast<std::size_t>(dim)) throw ContractError("matrix dimension is not a power of 3");
  return x;
}

}  // namespace

double verify_lemma(const DensityMatrix& rho, int trials, Rng& rng) {
  if (trials < 1) throw ContractError("verify_lemma needs at least one trial");
  const int x = subset_size_for_dim(rho.matrix.rows());
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Eigen::MatrixXcd u = kron_power(embed_spin_unitary(haar_unitary(rng)), x);
    worst = std::max(worst, (u * rho.matrix * u.adjoint() - rho.matrix).norm());
  }
  return worst;
}

double verify_lemma(const QutritState& state, const std::vector<int>& keep, int trials, Rng& rng) {
  return verify_lemma(partial_trace(state, keep), trials, rng);
}

namespace {

Matrix2c canonical_phase(const Matrix2c& m) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (std::abs(m(r, c)) > 1e-9) return m * (std::conj(m(r, c)) / std::abs(m(r, c)));
    }
  }
  return m;
}

std::vector<long long> rounded_key(const Matrix2c& m) {
  std::vector<long long> key;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      key.push_back(std::llround(m(r, c).real() * 1e6));
      key.push_back(std::llround(m(r, c).imag() * 1e6));
    }
  }
  return key;
}

std::vector<Matrix2c> generate_cliffords() {
  const double h = 1.0 / std::sqrt(2.0);
  Matrix2c hadamard;
  hadamard << h, h, h, -h;
  Matrix2c phase;
  phase << 1.0, 0.0, 0.0, cplx(0.0, 1.0);
  const std::array<Matrix2c, 2> generators{hadamard, phase};

  std::vector<Matrix2c> group{Matrix2c::Identity()};
  std::set<std::vector<long long>> seen{rounded_key(group[0])};
  for (std::size_t next = 0; next < group.size(); ++next) {
    for (const Matrix2c& gen : generators) {
      const Matrix2c m = canonical_phase(gen * group[next]);
      if (seen.insert(rounded_key(m)).second) group.push_back(m);
    }
  }
  return group;
}

}  // namespace

const std::vector<Matrix2c>& clifford_group() {
  static const std::vector<Matrix2c> group = generate_cliffords();
  return group;
}

DensityMatrix twirl(const DensityMatrix& rho) {
  if (rho.matrix.rows() != 9 || rho.matrix.cols() != 9) {
    throw ContractError("twirl expects a two-node (9x9) density matrix");
  }
  const std::array<cplx, 4> phases{cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  const auto& group = clifford_group();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(9, 9);
  for (const Matrix2c& c : group) {
    for (const cplx& ph : phases) {
      const Eigen::MatrixXcd u = kron_power(embed_spin_unitary(ph * c), 2);
      acc += u * rho.matrix * u.adjoint();
    }
  }
  acc /= static_cast<double>(group.size() * phases.size());
  return DensityMatrix{std::move(acc), rho.subset};
}

Eigen::MatrixXcd single_node_matrix(double p1) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 0) = p1;
  m(1, 1) = m(2, 2) = (1.0 - p1) / 2.0;
  return m;
}

namespace {

constexpr int kVacVac = 0;
constexpr std::array<int, 4> kMixedDiagonal{1, 2, 3, 6};  // |0s>, |s0>
constexpr std::array<int, 4> kSpinBlock{4, 5, 7, 8};      // |11>, |12>, |21>, |22>
constexpr int kUpDown = 5;
constexpr int kDownUp = 7;

Eigen::VectorXcd singlet_vector() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
  v(kUpDown) = 1.0 / std::sqrt(2.0);
  v(kDownUp) = -1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace

Eigen::MatrixXcd two_node_matrix(double p1p, double p2p, double p3p, double q) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(9, 9);
  m(kVacVac, kVacVac) = p1p;
  for (int i : kMixedDiagonal) m(i, i) += p2p / 4.0;
  for (int i : kSpinBlock) m(i, i) += p3p * (1.0 - q) / 4.0;
  const Eigen::VectorXcd s = singlet_vector();
  m += p3p * q * (s * s.adjoint());
  return m;
}

SingleNodeForm fit_single(const DensityMatrix& rho) {
  if (rho.matrix.rows() != 3) throw ContractError("fit_single expects a one-node (3x3) matrix");
  SingleNodeForm f;
  f.p1 = rho.matrix(0, 0).real();
  f.p2 = rho.matrix(1, 1).real() + rho.matrix(2, 2).real();
  Eigen::MatrixXcd model = Eigen::MatrixXcd::Zero(3, 3);
  model(0, 0) = f.p1;
  model(1, 1) = model(2, 2) = f.p2 / 2.0;
  f.residual = (rho.matrix - model).norm();
  return f;
}

TwoNodeForm fit_two(const DensityMatrix& rho) {
  if (rho.matrix.rows() != 9) throw ContractError("fit_two expects a two-node (9x9) matrix");
  const auto& m = rho.matrix;
  TwoNodeForm f;
  f.p1p = m(kVacVac, kVacVac).real();
  for (int i : kMixedDiagonal) f.p2p += m(i, i).real();
  f.p3p = 1.0 - f.p1p - f.p2p;
  double q_for_model = 0.0;
  if (f.p3p >= kUndefinedQThreshold) {
    const Eigen::VectorXcd s = singlet_vector();
    const double singlet_weight = (s.adjoint() * m * s)(0, 0).real();
    f.q = (4.0 * singlet_weight / f.p3p - 1.0) / 3.0;
    q_for_model = *f.q;
  }
  f.residual = (m - two_node_matrix(f.p1p, f.p2p, f.p3p, q_for_model)).norm();
  return f;
}

}  // namespace dimernet
