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

#include <string>

#include <doctest.h>
#include <json.hpp>

#include "indmst/error.hpp"
#include "indmst/io.hpp"
#include "indmst/solver.hpp"
#include "test_support.hpp"

namespace indmst {
namespace {

using namespace testing;

ErrorCode parse_error_code(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInternalInvariantBroken;
}

TEST_CASE("parse Example W") {
  const Graph g = parse_instance(kExampleWText);
  CHECK(g.vertex_count == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.existing_set().size() == 4);
  CHECK(g == example_w_graph());
}

TEST_CASE("parse header-only instance") {
  const Graph g = parse_instance("p ind-mst 1 0\n");
  CHECK(g.vertex_count == 1);
  CHECK(Instance::from_graph(g).horizon() == 0);
}

TEST_CASE("parse comments, blank lines and CRLF") {
  const Graph g = parse_instance("# a comment\r\np ind-mst 2 1\r\n\r\n  # indented\ne 1 2 -3 1");
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges[0].w == -3);
}

TEST_CASE("parse errors name the line") {
  try {
    parse_instance("p ind-mst 2 2\ne 1 2 3 1\ne 1 x 3 0\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(parse_error_code("") == ErrorCode::kParseError);
  CHECK(parse_error_code("p mst 2 1\n") == ErrorCode::kParseError);
  CHECK(parse_error_code("p ind-mst 2 1\ne 1 3 1 1\n") == ErrorCode::kParseError);
  CHECK(parse_error_code("p ind-mst 2 1\ne 1 2 1 2\n") == ErrorCode::kParseError);
  CHECK(parse_error_code("p ind-mst 2 2\ne 1 2 1 1\n") == ErrorCode::kParseError);
  CHECK(parse_error_code("p ind-mst 2 1\ne 1 2 1 1\ne 1 2 1 1\n") == ErrorCode::kParseError);
  CHECK(parse_error_code("p ind-mst 2 1\ne 1 2 1.5 1\n") == ErrorCode::kParseError);
  CHECK(parse_error_code("p ind-mst 2 1\ns 20\ne 1 2 1 1\n") == ErrorCode::kParseError);
  CHECK(parse_error_code("p ind-mst 2 1\nx 1\n") == ErrorCode::kParseError);
  CHECK(parse_error_code("p ind-mst 2 1\ne 1 2 99999999999999999999 1\n") ==
        ErrorCode::kParseError);
  CHECK(parse_error_code("p ind-mst 4 2\ne 1 2 1 1\ne 3 4 1 1\n") ==
        ErrorCode::kInfeasibleInstance);
}

TEST_CASE("fixed-point scale") {
  const Graph g = parse_instance("p ind-mst 3 3\ns 100\ne 1 2 1.25 1\ne 2 3 -0.5 1\ne 1 3 7 0\n");
  CHECK(g.scale == 100);
  CHECK(g.weights() == std::vector<Weight>{125, -50, 700});
  const std::string text = emit_instance(g);
  CHECK(text == "p ind-mst 3 3\ns 100\ne 1 2 1.25 1\ne 2 3 -0.50 1\ne 1 3 7.00 0\n");
  CHECK(parse_instance(text) == g);
}

TEST_CASE("gen_random") {
  const GenParams params{5, 10, 42, 1, 9, 0.5};
  const Graph a = gen_random(params);
  CHECK(a == gen_random(params));
  CHECK(a.vertex_count == 5);
  CHECK(a.edge_count() == 10);
  CHECK(a.existing_set().size() >= 4);
  CHECK_NOTHROW(validate_instance(a));

  const Graph ties = gen_random({6, 12, 3, 3, 3, 0.5});
  for (const Edge& e : ties.edges) CHECK(e.w == 3);

  CHECK_THROWS_AS(gen_random({5, 3, 1, 1, 9, 0.5}), Error);
  CHECK_THROWS_AS(gen_random({5, 10, 1, 9, 1, 0.5}), Error);
  CHECK_THROWS_AS(gen_random({5, 10, 1, 1, 9, 1.5}), Error);
  CHECK_THROWS_AS(gen_random({0, 0, 1, 1, 9, 0.5}), Error);
}

TEST_CASE("generated instances validate and round-trip") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Random rng(seed);
    const std::size_t n = 1 + rng.index(12);
    const std::size_t m = n - 1 + (n > 1 ? rng.index(20) : 0);
    const Graph g = gen_random({n, m, seed, -50, 50, rng.unit()});
    CHECK_NOTHROW(validate_instance(g));
    const std::string text = emit_instance(g);
    const Graph back = parse_instance(text);
    CHECK(back == g);
    CHECK(emit_instance(back) == text);
  }
}

TEST_CASE("corpus instances stay within bounds") {
  const CorpusParams params;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = gen_corpus_instance(params, seed);
    const Instance inst = Instance::from_graph(g);
    CHECK(g.vertex_count >= 3);
    CHECK(g.vertex_count <= 7);
    CHECK(g.edge_count() <= 15);
    CHECK(inst.horizon() <= 8);
    for (const Edge& e : g.edges) {
      CHECK(e.w >= -9);
      CHECK(e.w <= 9);
    }
  }
}

TEST_CASE("emit_plan") {
  const Instance w = example_w();
  const BuildPlan plan = efficient_solve(w).plan;
  const auto doc = nlohmann::json::parse(emit_plan(plan, OutputFormat::kJson, w.graph()));
  CHECK(doc["algorithm"] == "efficient");
  CHECK(doc["order"] == nlohmann::json::array({kE24, kE13}));
  CHECK(doc["order_edges"] == nlohmann::json::parse("[[2,4],[1,3]]"));
  CHECK(doc["step_weights"] == nlohmann::json::array({15, 11, 7}));
  CHECK(doc["objective"] == 33);
  CHECK(doc["ultimate_weight"] == 7);
  CHECK(doc["horizon"] == 2);

  BuildPlan empty;
  empty.algorithm = "efficient";
  empty.horizon = 2;
  empty.step_weights = {4};
  empty.ultimate_weight = 4;
  empty.objective = objective_value(empty);
  const auto empty_doc = nlohmann::json::parse(emit_plan(empty, OutputFormat::kJson));
  CHECK(empty_doc["order"].empty());
  CHECK(empty_doc["objective"] == 12);

  const std::string tsv = emit_plan(plan, OutputFormat::kTsv, w.graph());
  CHECK(tsv ==
        "step\telement\tweight\n0\t-\t15\n1\t2-4\t11\n2\t1-3\t7\n"
        "# algorithm=efficient horizon=2 ultimate_weight=7 objective=33\n");

  CHECK_THROWS_AS(parse_output_format("xml"), Error);
}

TEST_CASE("Random draws stay in range") {
  Random rng(9);
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.uniform(-3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
    const double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(Random(5).uniform(0, 1000000) == Random(5).uniform(0, 1000000));
}

}  // namespace
}  // namespace indmst
