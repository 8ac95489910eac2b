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

#include "dimernet/entanglement.hpp"
#include "oracles.hpp"

using namespace dimernet;

namespace {

QutritState chain(int l, const DefectPattern& p) {
  return build_state(build_lattice(LatticeKind::chain_pbc, {l}), p);
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  }
  return out;
}

DensityMatrix werner(double q) { return DensityMatrix{two_node_matrix(0, 0, 1, q), {0, 1}}; }

}  // namespace

TEST_CASE("partial transpose of a product is the product of transposes") {
  Rng rng(1);
  const Eigen::MatrixXcd a = oracle::random_density(3, rng);
  const Eigen::MatrixXcd b = oracle::random_density(3, rng);
  const Eigen::MatrixXcd ab = kron(a, b);
  const Eigen::MatrixXcd expected = kron(a, Eigen::MatrixXcd(b.transpose()));
  CHECK((partial_transpose(ab, 3, 3) - expected).norm() < 1e-14);
  CHECK_THROWS_AS(partial_transpose(ab, 3, 2), ContractError);
}

TEST_CASE("Werner-type blocks: PPT threshold at q = 1/3") {
  const auto half = ppt_check(werner(0.5));
  CHECK(half.is_npt);
  CHECK(half.min_pt_eigenvalue == doctest::Approx(-0.125));
  CHECK_FALSE(ppt_check(werner(1.0 / 3.0)).is_npt);
  CHECK_FALSE(ppt_check(werner(0.0)).is_npt);
  CHECK_FALSE(ppt_check(DensityMatrix{two_node_matrix(1, 0, 0, 0), {0, 1}}).is_npt);
}

TEST_CASE("log negativity closed form") {
  for (double q : {0.4, 0.5, 0.6, 0.8, 1.0}) {
    CHECK(log_negativity(werner(q)) == doctest::Approx(std::log2((1.0 + 3.0 * q) / 2.0)).epsilon(1e-12));
  }
  CHECK(log_negativity(werner(1.0)) == doctest::Approx(1.0));
  CHECK(log_negativity(werner(0.2)) == 0.0);
  Rng rng(2);
  const Eigen::MatrixXcd sep = kron(oracle::random_density(3, rng),
                                                       oracle::random_density(3, rng));
  CHECK(log_negativity(DensityMatrix{sep, {0, 1}}) == 0.0);
}

TEST_CASE("log negativity vanishes exactly on PPT marginals of lattice states") {
  for (int l : {6, 8}) {
    for (int p : {0, 2}) {
      const auto s = chain(l, DefectPattern::symmetric(p));
      for (int b = 1; b < l; ++b) {
        const auto rho = partial_trace(s, {0, b});
        CHECK((log_negativity(rho) == 0.0) == !ppt_check(rho).is_npt);
        CHECK(log_negativity(rho) >= 0.0);
      }
    }
  }
}

TEST_CASE("von Neumann entropy reference values") {
  CHECK(entropy(werner(1.0)) == doctest::Approx(0.0).epsilon(1e-12));
  const auto s = build_state(LatticeGraph::from_edges(2, {{0, 1}}), DefectPattern::none());
  CHECK(entropy(partial_trace(s, {0})) == doctest::Approx(1.0));
  CHECK(entropy(DensityMatrix{Eigen::MatrixXcd::Identity(3, 3) / 3.0, {0}}) ==
        doctest::Approx(std::log2(3.0)));
  CHECK(subset_entropy(s, {0}) == doctest::Approx(1.0));
  CHECK(subset_entropy(s, {}) == 0.0);
  CHECK(subset_entropy(s, {0, 1}) == doctest::Approx(0.0).epsilon(1e-12));
  Eigen::VectorXd spec(3);
  spec << 0.5, 0.5, 1e-16;
  CHECK(entropy_of_spectrum(spec) == doctest::Approx(1.0));
}

TEST_CASE("subset entropy and purity agree with explicit reduced matrices") {
  const auto s = chain(8, DefectPattern::symmetric(2));
  for (const auto& sub : std::vector<std::vector<int>>{{0}, {0, 1}, {0, 4}, {1, 2, 5}, {0, 1, 2, 3}}) {
    const auto rho = partial_trace(s, sub);
    CHECK(subset_entropy(s, sub) == doctest::Approx(entropy(rho)).epsilon(1e-10));
    CHECK(subset_purity(s, sub) == doctest::Approx((rho.matrix * rho.matrix).trace().real()).epsilon(1e-12));
  }
  // Complementary subsets of a pure state share their entropy.
  CHECK(subset_entropy(s, {0, 1, 2}) == doctest::Approx(subset_entropy(s, {3, 4, 5, 6, 7})).epsilon(1e-10));
}

TEST_CASE("strong subadditivity holds on lattice states") {
  const auto s = chain(8, DefectPattern::symmetric(2));
  CHECK(ssa_check(s, {0}, {}, {1}) >= -1e-10);
  CHECK(ssa_check(s, {0, 1}, {2}, {3}) >= -1e-10);
  const auto vac = chain(8, DefectPattern::symmetric(8));
  CHECK(ssa_check(vac, {0}, {1}, {2}) == doctest::Approx(0.0).epsilon(1e-12));
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const auto tri = random_disjoint_triple(8, rng);
    CHECK(ssa_check(s, tri.a, tri.b, tri.c) >= -1e-10);
  }
  CHECK_THROWS_AS(ssa_check(s, {0}, {0}, {1}), ContractError);
}

TEST_CASE("twirling never lowers the entropy") {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho{oracle::random_density(9, rng), {0, 1}};
    CHECK(entropy(twirl(rho)) >= entropy(rho) - 1e-10);
  }
}

TEST_CASE("GME scan: coherent defect superpositions are certified") {
  for (int l : {6, 8}) {
    const auto rep = certify_gme(chain(l, DefectPattern::symmetric(2)));
    CHECK(rep.certified);
    CHECK(rep.bipartitions_checked == (1 << (l - 1)) - 1);
    CHECK(rep.min_mixedness > rep.tolerance);
  }
  CHECK(certify_gme(build_state(build_lattice(LatticeKind::square_pbc, {2, 4}),
                                DefectPattern::symmetric(2)))
            .certified);
}

TEST_CASE("GME scan: counterexamples have a pure cut") {
  // Fixed defects factor out as vacancies.
  const auto fixed = certify_gme(chain(6, DefectPattern::fixed({0, 3})));
  CHECK_FALSE(fixed.certified);
  CHECK(fixed.min_mixedness < 1e-12);
  // The 4-cycle dimer state is the product of singlets on (0,2) and (1,3).
  const auto ring = certify_gme(chain(4, DefectPattern::symmetric(0)), {.record_purities = true});
  CHECK_FALSE(ring.certified);
  CHECK(ring.witness_partition == std::vector<int>{0, 2});
  CHECK(ring.purities.size() == 7);
  // The vacuum is a product.
  CHECK_FALSE(certify_gme(chain(6, DefectPattern::symmetric(6))).certified);
}
