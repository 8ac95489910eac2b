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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimernet/rdm.hpp"
#include "oracles.hpp"

using namespace dimernet;

namespace {

QutritState chain(int l, int p) {
  return build_state(build_lattice(LatticeKind::chain_pbc, {l}), DefectPattern::symmetric(p));
}

DensityMatrix from_matrix(const Eigen::MatrixXcd& m, std::vector<int> subset = {0, 1}) {
  return DensityMatrix{m, std::move(subset)};
}

Eigen::MatrixXcd trace_out_second(const Eigen::MatrixXcd& rho2) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(3, 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int k = 0; k < 3; ++k) out(a, b) += rho2(3 * a + k, 3 * b + k);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("single dimer: one-node marginal is the maximally mixed spin") {
  const auto s = build_state(LatticeGraph::from_edges(2, {{0, 1}}), DefectPattern::none());
  const auto rho = partial_trace(s, {0});
  Eigen::Matrix3cd expected = Eigen::Matrix3cd::Zero();
  expected(1, 1) = expected(2, 2) = 0.5;
  CHECK((rho.matrix - expected).norm() < 1e-15);
}

TEST_CASE("vacuum two-node marginal is the vacancy projector") {
  const auto rho = partial_trace(chain(4, 4), {0, 1});
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(9, 9);
  expected(0, 0) = 1.0;
  CHECK((rho.matrix - expected).norm() < 1e-15);
}

TEST_CASE("partial trace agrees with the brute-force loop oracle") {
  Rng rng(3);
  std::vector<QutritState> states{chain(4, 0), chain(4, 2), chain(6, 0), chain(6, 2), chain(5, 1)};
  states.push_back(apply_local_gate(chain(6, 2), Eigen::Matrix3cd(embed_spin_unitary(haar_unitary(rng)))));
  for (const auto& s : states) {
    const int n = s.node_count();
    const std::vector<std::vector<int>> keeps{{0}, {2}, {0, 1}, {1, 0}, {0, 3}, {n - 1, 1}, {0, 2, 4}};
    for (const auto& keep : keeps) {
      if (keep.back() >= n) continue;
      CAPTURE(keep.size());
      const auto rho = partial_trace(s, keep);
      CHECK(rho.subset == keep);
      CHECK((rho.matrix - oracle::partial_trace_loops(s.amplitudes(), n, keep)).norm() < 1e-12);
    }
  }
}

TEST_CASE("partial trace contract checks") {
  const auto s = chain(6, 2);
  CHECK_THROWS_AS(partial_trace(s, {}), ContractError);
  CHECK_THROWS_AS(partial_trace(s, {0, 0}), ContractError);
  CHECK_THROWS_AS(partial_trace(s, {6}), ContractError);
  CHECK_THROWS_AS(partial_trace(chain(8, 0), {0, 1, 2, 3, 4, 5, 6}), BudgetError);
}

TEST_CASE("the two-node marginal traces down to the one-node marginal") {
  const auto s = chain(8, 2);
  for (int b = 1; b < 8; ++b) {
    const auto rho2 = partial_trace(s, {0, b});
    CHECK((trace_out_second(rho2.matrix) - partial_trace(s, {0}).matrix).norm() < 1e-13);
  }
}

TEST_CASE("validate rejects non-density matrices") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
  CHECK_THROWS(from_matrix(m, {0}).validate());
  m /= 3.0;
  CHECK_NOTHROW(from_matrix(m, {0}).validate());
  m(0, 1) = cplx(0.0, 0.1);
  CHECK_THROWS(from_matrix(m, {0}).validate());
  Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(3, 3);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS(from_matrix(neg, {0}).validate());
}

TEST_CASE("reduced states commute with collective spin unitaries") {
  Rng rng(17);
  for (const auto& s : {chain(6, 0), chain(6, 2), chain(8, 2)}) {
    for (const auto& keep : std::vector<std::vector<int>>{{0}, {0, 1}, {0, 2}, {0, 3}, {0, 1, 3}}) {
      CHECK(verify_lemma(s, keep, 20, rng) < 1e-10);
    }
  }
  CHECK(verify_lemma(from_matrix(Eigen::MatrixXcd::Identity(9, 9) / 9.0), 20, rng) < 1e-14);
}

TEST_CASE("lemma deviation grows linearly with a non-invariant perturbation") {
  const auto rho = partial_trace(chain(6, 2), {0, 1});
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(9, 9);
  x(4, 4) = 1.0;
  x(8, 8) = -1.0;
  auto dev = [&](double eps) {
    Rng rng(99);
    return verify_lemma(from_matrix(rho.matrix + eps * x), 20, rng);
  };
  const double d1 = dev(1e-3);
  const double d2 = dev(2e-3);
  CHECK(d1 > 1e-4);
  CHECK(d2 / d1 == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("Clifford group has 24 elements modulo phase") {
  const auto& g = clifford_group();
  CHECK(g.size() == 24);
  for (const auto& c : g) CHECK(unitarity_defect(c) < 1e-12);
}

TEST_CASE("twirl matches the analytic Haar twirl") {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto rho = from_matrix(oracle::random_density(9, rng));
    const auto tw = twirl(rho);
    CHECK((tw.matrix - oracle::haar_twirl_blocks(rho.matrix)).norm() < 1e-12);
    CHECK((twirl(tw).matrix - tw.matrix).norm() < 1e-12);
    Rng lemma_rng(t);
    CHECK(verify_lemma(tw, 10, lemma_rng) < 1e-12);
  }
  CHECK_THROWS_AS(twirl(from_matrix(Eigen::MatrixXcd::Identity(3, 3) / 3.0, {0})), ContractError);
}

TEST_CASE("twirl leaves invariant states and the singlet fixed") {
  const auto singlet = from_matrix(two_node_matrix(0, 0, 1, 1));
  CHECK((twirl(singlet).matrix - singlet.matrix).norm() < 1e-13);
  const auto rho = partial_trace(chain(8, 2), {0, 1});
  CHECK((twirl(rho).matrix - rho.matrix).norm() < 1e-12);
}

TEST_CASE("single-node fits") {
  const auto f0 = fit_single(partial_trace(chain(6, 0), {0}));
  CHECK(f0.p1 == doctest::Approx(0.0));
  CHECK(f0.p2 == doctest::Approx(1.0));
  CHECK(f0.residual < 1e-12);
  const auto fv = fit_single(partial_trace(chain(6, 6), {0}));
  CHECK(fv.p1 == doctest::Approx(1.0));
  const auto s = chain(6, 2);
  for (int site = 0; site < 6; ++site) {
    const auto f = fit_single(partial_trace(s, {site}));
    CHECK(f.p1 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(f.residual < 1e-12);
  }
}

TEST_CASE("two-node fits") {
  const auto singlet = fit_two(from_matrix(two_node_matrix(0, 0, 1, 1)));
  CHECK(singlet.p1p == doctest::Approx(0.0));
  CHECK(singlet.p2p == doctest::Approx(0.0));
  CHECK(singlet.p3p == doctest::Approx(1.0));
  REQUIRE(singlet.q.has_value());
  CHECK(*singlet.q == doctest::Approx(1.0));

  const auto w = fit_two(from_matrix(two_node_matrix(0.1, 0.2, 0.7, 1.0 / 3.0)));
  CHECK(w.p1p == doctest::Approx(0.1));
  CHECK(w.p2p == doctest::Approx(0.2));
  CHECK(*w.q == doctest::Approx(1.0 / 3.0));
  CHECK(w.residual < 1e-14);

  const auto nn = fit_two(partial_trace(chain(6, 0), {0, 1}));
  CHECK(nn.p3p == doctest::Approx(1.0));
  CHECK(*nn.q == doctest::Approx(0.6));
  CHECK(nn.residual < 1e-12);

  const auto vac = fit_two(partial_trace(chain(4, 4), {0, 1}));
  CHECK_FALSE(vac.q.has_value());
  CHECK(vac.p1p == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_two(partial_trace(chain(4, 0), {0})), ContractError);
}

TEST_CASE("fit residual measures the one-spin coherence the model omits") {
  Eigen::MatrixXcd m = two_node_matrix(0.2, 0.4, 0.4, 0.5);
  const double eps = 0.01;
  m(1, 2) = eps;
  m(2, 1) = eps;
  const auto f = fit_two(from_matrix(m));
  CHECK(f.residual == doctest::Approx(std::sqrt(2.0) * eps));
  CHECK(*f.q == doctest::Approx(0.5));
}

TEST_CASE("two-node forms on a ring depend only on the separation") {
  const auto s = chain(8, 2);
  for (int d = 1; d < 8; ++d) {
    const auto ref = fit_two(partial_trace(s, {0, d}));
    for (int a = 1; a < 8; ++a) {
      const auto f = fit_two(partial_trace(s, {a, (a + d) % 8}));
      CHECK(f.p1p == doctest::Approx(ref.p1p).epsilon(1e-12));
      CHECK(f.p2p == doctest::Approx(ref.p2p).epsilon(1e-12));
      CHECK(f.q.has_value() == ref.q.has_value());
      if (f.q && ref.q) CHECK(*f.q == doctest::Approx(*ref.q).epsilon(1e-10));
    }
  }
}

TEST_CASE("kron_power dimensions") {
  const Eigen::Matrix3cd g = Eigen::Matrix3cd::Identity();
  CHECK(kron_power(g, 1).rows() == 3);
  CHECK(kron_power(g, 3).rows() == 27);
  CHECK(kron_power(g, 3).isIdentity());
}
