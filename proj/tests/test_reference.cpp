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

#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "indmst/error.hpp"
#include "indmst/reference.hpp"
#include "indmst/solver.hpp"
#include "test_support.hpp"

namespace indmst {
namespace {

using namespace testing;

// Existing 4-cycle of weight-10 edges with one cheap and one barely useful
// diagonal, so building order matters.
Instance order_matters() {
  Graph g;
  g.vertex_count = 4;
  g.edges = {{0, 1, 10, true}, {1, 2, 10, true}, {2, 3, 10, true}, {3, 0, 10, true},
             {0, 2, 1, false}, {1, 3, 9, false}};
  return Instance::from_graph(g);
}

TEST_CASE("brute_force_optimum") {
  Graph g = triangle_graph();
  g.edges.pop_back();
  CHECK(brute_force_optimum(Instance::from_graph(g)) == 8);
  CHECK(brute_force_optimum(Instance::from_graph(triangle_graph())) == 12);
  CHECK(brute_force_optimum(example_w()) == 33);
  CHECK(permutation_optimum(example_w()) == 33);
}

TEST_CASE("brute force respects the cap") {
  Graph g;
  g.vertex_count = 2;
  g.edges.push_back({0, 1, 5, true});
  for (int i = 0; i < 5; ++i) g.edges.push_back({0, 1, i, false});
  const Instance inst = Instance::from_graph(g);
  try {
    brute_force_optimum(inst, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
  CHECK_THROWS_AS(compute_f_series(inst, 4), Error);
  CHECK_THROWS_AS(check_extension_property(inst, 4), Error);
  CHECK(brute_force_optimum(inst, 5) == 5 + 0 * 5);
}

TEST_CASE("compute_f_series") {
  CHECK(compute_f_series(example_w()).values == std::vector<Weight>{15, 11, 7});
  CHECK(compute_f_series(Instance::from_graph(triangle_graph())).values ==
        std::vector<Weight>{8, 4});

  Graph useless = triangle_graph();
  useless.edges[2].w = 100;
  useless.edges.push_back({0, 2, 50, false});
  const FSeries flat = compute_f_series(Instance::from_graph(useless));
  CHECK(flat.values == std::vector<Weight>{8, 8, 8});
  CHECK(flat.stabilization_index() == 0);
  CHECK(flat.well_formed());

  FSeries bumpy{{5, 3, 4}};
  CHECK_FALSE(bumpy.well_formed());
}

TEST_CASE("check_lower_bound") {
  const Instance w = example_w();
  CHECK(check_lower_bound(w, efficient_solve(w).plan));

  const Instance inst = order_matters();
  // Building 1-3 first is optimal (30 + 21 + 20), 2-4 first is not (30 + 29 + 20).
  CHECK(compute_f_series(inst).values == std::vector<Weight>{30, 21, 20});
  const BuildPlan good = efficient_solve(inst).plan;
  CHECK(good.order == std::vector<ElementId>{4, 5});
  CHECK(check_lower_bound(inst, good));

  BuildPlan bad = good;
  bad.order = {5, 4};
  bad.step_weights = {30, f_eval(inst, make_set(6, {5})), 20};
  bad.objective = objective_value(bad);
  CHECK(bad.objective > good.objective);
  CHECK_FALSE(check_lower_bound(inst, bad));

  Graph g = triangle_graph();
  g.edges.pop_back();
  const Instance none = Instance::from_graph(g);
  CHECK(check_lower_bound(none, greedy_solve(none)));
}

TEST_CASE("DP agrees with permutation enumeration") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    CorpusParams params;
    params.horizon_max = 5;
    const Instance inst = Instance::from_graph(gen_corpus_instance(params, seed));
    CHECK(brute_force_optimum(inst) == permutation_optimum(inst));
    CHECK(compute_f_series(inst).sum() == brute_force_optimum(inst));
    CHECK(compute_f_series(inst).well_formed());
  }
}

TEST_CASE("brute_force_plan is optimal and monotone") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Instance inst = Instance::from_graph(gen_corpus_instance({}, seed));
    const BuildPlan plan = brute_force_plan(inst);
    CHECK(plan.objective == brute_force_optimum(inst));
    for (std::size_t i = 1; i < plan.step_weights.size(); ++i) {
      CHECK(plan.step_weights[i] < plan.step_weights[i - 1]);
    }
  }
}

TEST_CASE("audit_trace") {
  const Instance w = example_w();
  auto trace = efficient_solve(w, true).trace;
  const Report ok = audit_trace(w, trace);
  CHECK(ok.passed());
  for (const char* name : {"L4.1", "L4.2", "L4.3", "L4.4", "L4.5", "L4.6", "C2", "C3"}) {
    REQUIRE(ok.find(name) != nullptr);
    CHECK(ok.find(name)->checked > 0);
  }
  CHECK(ok.find("L4.1")->checked == 6);
  CHECK(ok.find("C3")->checked == 2);

  // Drop the pending diagonal 24 from Z^2: X^2 = {} so L4.1 still holds but
  // Y^2 \ Z^2 = {24} no longer matches the empty H'^2.
  trace[1].z.erase(kE24);
  const Report broken = audit_trace(w, trace);
  CHECK_FALSE(broken.passed());
  const CheckResult* l6 = broken.find("L4.6");
  REQUIRE(l6 != nullptr);
  CHECK_FALSE(l6->passed);
  CHECK(l6->first_violation == std::size_t{2});

  Graph single;
  single.vertex_count = 1;
  const Instance empty = Instance::from_graph(single);
  CHECK(audit_trace(empty, efficient_solve(empty, true).trace).passed());
}

TEST_CASE("check_extension_property") {
  const Report w = check_extension_property(example_w());
  CHECK(w.passed());
  // k = 0: A = {}, B in {{13}, {24}} -> 2 pairs; k = 1: A = {13}/{24}, B = {13,24}.
  CHECK(w.find("L3")->checked == 4);

  Graph g = triangle_graph();
  const Report tri = check_extension_property(Instance::from_graph(g));
  CHECK(tri.passed());
  CHECK(tri.find("L3")->checked == 1);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    CorpusParams params;
    params.n_max = 6;
    params.horizon_max = 6;
    CHECK(check_extension_property(Instance::from_graph(gen_corpus_instance(params, seed))).passed());
  }
}

TEST_CASE("audit_exchange_list flags a non-optimal order") {
  const Instance inst = order_matters();
  const EfficientResult r = efficient_solve(inst);
  CHECK(audit_exchange_list(inst, r.initial_basis, r.ultimate_basis, r.exchange_list).passed());

  std::vector<ExchangePair> swapped(r.exchange_list.rbegin(), r.exchange_list.rend());
  const Report bad = audit_exchange_list(inst, r.initial_basis, r.ultimate_basis, swapped);
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.find("EX.optimal")->passed);
}

}  // namespace
}  // namespace indmst
