// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <memory>

#include <doctest.h>

#include "indmst/error.hpp"
#include "indmst/graphic.hpp"
#include "test_support.hpp"

namespace indmst {
namespace {

using testing::make_set;

TEST_CASE("graphic oracle on the triangle") {
  const GraphicOracle oracle(std::make_shared<const Graph>(testing::triangle_graph()));
  CHECK(oracle.is_independent(make_set(3, {0, 1})));
  CHECK_FALSE(oracle.is_independent(ElementSet::full(3)));

  Graph loop;
  loop.vertex_count = 2;
  loop.edges = {{1, 1, 3, true}, {0, 1, 1, true}};
  const GraphicOracle with_loop(std::make_shared<const Graph>(loop));
  CHECK_FALSE(with_loop.is_independent(make_set(2, {0})));
  CHECK(find_circuit(with_loop, make_set(2, {1}), 0) == make_set(2, {0}));
}

TEST_CASE("graphic oracle agrees with a DFS acyclicity check") {
  Random rng(21);
  int checked = 0;
  for (int g = 0; g < 50; ++g) {
    auto graph = std::make_shared<const Graph>(testing::random_small_graph(rng, 12, 18));
    const GraphicOracle oracle(graph);
    for (int i = 0; i < 10; ++i) {
      const ElementSet s = testing::random_subset(rng, graph->edge_count());
      CHECK(oracle.is_independent(s) == testing::is_forest_dfs(*graph, s));
      ++checked;
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("cycle_through") {
  Graph path;  // a-b-c plus ca
  path.vertex_count = 3;
  path.edges = {{0, 1, 1, true}, {1, 2, 1, true}, {2, 0, 1, true}};
  CHECK(cycle_through(make_set(3, {0, 1}), 2, path) == ElementSet::full(3));

  using namespace testing;
  CHECK(cycle_through(make_set(6, {kE13, kE24, kE12}), kE23, example_w_graph()) ==
        make_set(6, {kE13, kE12, kE23}));

  Graph star;  // s=0, x=1, y=2
  star.vertex_count = 3;
  star.edges = {{0, 1, 1, true}, {0, 2, 1, true}, {1, 2, 1, true}};
  CHECK(cycle_through(make_set(3, {0, 1}), 2, star) == ElementSet::full(3));

  try {
    cycle_through(make_set(3, {0}), 2, star);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPreconditionViolated);
  }
}

TEST_CASE("cycle_through output is a circuit") {
  Random rng(22);
  int checked = 0;
  for (int g = 0; g < 80; ++g) {
    auto graph = std::make_shared<const Graph>(testing::random_small_graph(rng, 10, 16));
    const GraphicOracle oracle(graph);
    const ElementSet forest = testing::random_basis(rng, oracle);
    for (ElementId e = 0; e < graph->edge_count(); ++e) {
      if (forest.contains(e)) continue;
      const ElementSet c = cycle_through(forest, e, *graph);
      CHECK(c.contains(e));
      CHECK_FALSE(testing::is_forest_dfs(*graph, c));
      for (ElementId f : c) CHECK(testing::is_forest_dfs(*graph, c.without(f)));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("incremental builders agree with the oracle") {
  Random rng(23);
  for (int g = 0; g < 40; ++g) {
    auto graph = std::make_shared<const Graph>(testing::random_small_graph(rng, 9, 16));
    const GraphicOracle oracle(graph);
    auto grow = oracle.make_growing_set();
    auto exch = oracle.make_exchange_set();
    for (ElementId e = 0; e < graph->edge_count(); ++e) {
      CHECK(grow->can_add(e) == oracle.is_independent(grow->members().with(e)));
      if (grow->can_add(e)) grow->add(e);

      const auto circuit = exch->circuit_with(e);
      const bool independent = oracle.is_independent(exch->members().with(e));
      CHECK(circuit.empty() == independent);
      if (independent) {
        exch->add(e);
      } else {
        ElementSet expected = find_circuit(oracle, exch->members(), e);
        CHECK(expected.to_vector() == circuit);
        // Swap e in for the smallest circuit member to exercise removal.
        if (circuit.front() != e) {
          exch->remove(circuit.front());
          exch->add(e);
        }
      }
      CHECK(oracle.is_independent(exch->members()));
    }
  }
}

TEST_CASE("union-find tracks components") {
  UnionFind uf(5);
  CHECK(uf.component_count() == 5);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(3, 4));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.connected(0, 1));
  CHECK_FALSE(uf.connected(1, 3));
  CHECK(uf.component_count() == 3);
}

TEST_CASE("validate_instance") {
  CHECK_NOTHROW(validate_instance(testing::example_w_graph()));

  Graph split;
  split.vertex_count = 4;
  split.edges = {{0, 1, 1, true}, {2, 3, 1, true}, {1, 2, 1, false}};
  try {
    validate_instance(split);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasibleInstance);
    CHECK(std::string(e.what()).find("2 components") != std::string::npos);
  }

  Graph single;
  single.vertex_count = 1;
  CHECK_NOTHROW(validate_instance(single));
  CHECK(Instance::from_graph(single).horizon() == 0);

  Graph heavy;
  heavy.vertex_count = 2;
  heavy.edges = {{0, 1, std::numeric_limits<Weight>::max() / 2, true},
                 {0, 1, std::numeric_limits<Weight>::max() / 2, false}};
  try {
    validate_instance(heavy);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverflowRisk);
  }
}

}  // namespace
}  // namespace indmst
