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

#include "dimernet/io.hpp"
#include "dimernet/lattice.hpp"

using namespace dimernet;

TEST_CASE("chain_pbc of length 4 is the 4-cycle") {
  const auto g = build_lattice(LatticeKind::chain_pbc, {4});
  CHECK(g.node_count() == 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(g.is_regular());
  CHECK(g.degree(0) == 2);
}

TEST_CASE("complete graph K4 has six edges") {
  CHECK(build_lattice(LatticeKind::complete, {4}).edges().size() == 6);
}

TEST_CASE("degenerate periodic lattices are rejected") {
  CHECK_THROWS_AS(build_lattice(LatticeKind::square_pbc, {2, 2}), ContractError);
  CHECK_THROWS_AS(build_lattice(LatticeKind::chain_pbc, {2}), ContractError);
  CHECK_THROWS_AS(build_lattice(LatticeKind::square_pbc, {1, 4}), ContractError);
  CHECK_THROWS_AS(build_lattice(LatticeKind::chain_pbc, {4, 4}), ContractError);
}

TEST_CASE("node budget is enforced") {
  CHECK_THROWS_AS(build_lattice(LatticeKind::chain_pbc, {13}), BudgetError);
  CHECK_THROWS_AS(build_lattice(LatticeKind::square_pbc, {4, 4}), BudgetError);
  CHECK_NOTHROW(build_lattice(LatticeKind::chain_pbc, {13}, 14));
}

TEST_CASE("square_pbc degrees: 4 on LxL, 3 on a 2xL ladder") {
  CHECK(build_lattice(LatticeKind::square_pbc, {3, 3}).degree(4) == 4);
  const auto ladder = build_lattice(LatticeKind::square_pbc, {2, 4});
  CHECK(ladder.is_regular());
  CHECK(ladder.degree(0) == 3);
  CHECK(ladder.edges().size() == 12);
}

TEST_CASE("every built-in kind is regular, symmetric and irreflexive up to the budget") {
  std::vector<LatticeGraph> graphs;
  for (int l = 3; l <= 12; ++l) graphs.push_back(build_lattice(LatticeKind::chain_pbc, {l}));
  for (int n = 2; n <= 12; ++n) graphs.push_back(build_lattice(LatticeKind::complete, {n}));
  for (int lx = 2; lx <= 6; ++lx) {
    for (int ly = 2; lx * ly <= 12; ++ly) {
      if (lx == 2 && ly == 2) continue;
      graphs.push_back(build_lattice(LatticeKind::square_pbc, {lx, ly}));
    }
  }
  for (const auto& g : graphs) {
    CAPTURE(g.id());
    CHECK(g.is_regular());
    for (int a = 0; a < g.node_count(); ++a) {
      CHECK_FALSE(g.has_edge(a, a));
      for (int b = 0; b < g.node_count(); ++b) CHECK(g.has_edge(a, b) == g.has_edge(b, a));
    }
  }
}

TEST_CASE("custom edge lists are validated") {
  CHECK_THROWS_AS(LatticeGraph::from_edges(3, {{0, 0}}), ContractError);
  CHECK_THROWS_AS(LatticeGraph::from_edges(3, {{0, 1}, {1, 0}}), ContractError);
  CHECK_THROWS_AS(LatticeGraph::from_edges(3, {{0, 3}}), ContractError);
  const auto g = LatticeGraph::from_edges(4, {{2, 1}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.distance(0, 2) == 2);
  CHECK(g.distance(0, 3) == -1);
  CHECK_FALSE(g.is_regular());
}

TEST_CASE("distance classes on a ring") {
  const auto g = build_lattice(LatticeKind::chain_pbc, {6});
  const auto classes = g.distance_classes(0);
  CHECK(classes.at(1) == std::vector<int>{1, 5});
  CHECK(classes.at(2) == std::vector<int>{2, 4});
  CHECK(classes.at(3) == std::vector<int>{3});
}

TEST_CASE("defect density is P/N") {
  const auto g = build_lattice(LatticeKind::chain_pbc, {8});
  CHECK(defect_density(DefectPattern::symmetric(0), g) == 0.0);
  CHECK(defect_density(DefectPattern::symmetric(8), g) == 1.0);
  CHECK(defect_density(DefectPattern::symmetric(2), g) == 0.25);
  CHECK(defect_density(DefectPattern::fixed({1, 5}), g) == 0.25);
}

TEST_CASE("defect patterns must leave an even occupied count") {
  const auto g = build_lattice(LatticeKind::chain_pbc, {6});
  CHECK_THROWS_AS(DefectPattern::symmetric(1).validate(g), ContractError);
  CHECK_THROWS_AS(DefectPattern::symmetric(7).validate(g), ContractError);
  CHECK_THROWS_AS(DefectPattern::fixed({0, 0}).validate(g), ContractError);
  CHECK_THROWS_AS(DefectPattern::fixed({6}).validate(g), ContractError);
  CHECK_THROWS_AS(DefectPattern::symmetric(-1), ContractError);
  CHECK_NOTHROW(DefectPattern::fixed({}).validate(g));
}

TEST_CASE("lattice specs: inline short forms, inline JSON and custom edges") {
  CHECK(io::parse_lattice("chain:6").id() == "chain_pbc:6");
  CHECK(io::parse_lattice("square:2x4").edges().size() == 12);
  CHECK(io::parse_lattice(R"({"kind":"square_pbc","dims":[3,3]})").node_count() == 9);
  const auto custom = io::parse_lattice(R"({"kind":"custom","edges":[[0,1],[1,2],[2,3]]})");
  CHECK(custom.kind() == LatticeKind::custom);
  CHECK(custom.node_count() == 4);
  const auto roundtrip = io::lattice_from_json(io::lattice_to_json(custom));
  CHECK(roundtrip.edges() == custom.edges());

  CHECK_THROWS_AS(io::parse_lattice("hexagon:4"), LatticeSpecError);
  CHECK_THROWS_AS(io::parse_lattice("chain:x"), LatticeSpecError);
  CHECK_THROWS_AS(io::parse_lattice("square:2x2"), LatticeSpecError);
  CHECK_THROWS_AS(io::parse_lattice(R"({"kind":"custom","edges":[[0,0]]})"), LatticeSpecError);
  CHECK_THROWS_AS(io::parse_lattice("{not json"), LatticeSpecError);
  CHECK_THROWS_AS(io::parse_lattice("chain:16"), BudgetError);
}
