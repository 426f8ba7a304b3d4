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

#include "indmst/graphic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "indmst/error.hpp"
#include "indmst/instance.hpp"

namespace indmst {

std::vector<Weight> Graph::weights() const {
  std::vector<Weight> out;
  out.reserve(edges.size());
  for (const Edge& edge : edges) out.push_back(edge.w);
  return out;
}

ElementSet Graph::existing_set() const {
  ElementSet out(edges.size());
  for (ElementId e = 0; e < edges.size(); ++e) {
    if (edges[e].existing) out.insert(e);
  }
  return out;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex UnionFind::find(Vertex x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

DynamicForest::DynamicForest(const Graph& graph)
    : graph_(&graph),
      adjacency_(graph.vertex_count),
      via_edge_(graph.vertex_count),
      seen_stamp_(graph.vertex_count, 0) {}

void DynamicForest::add(ElementId edge) {
  const Edge& ed = graph_->edges[edge];
  adjacency_[ed.u].emplace_back(ed.v, edge);
  adjacency_[ed.v].emplace_back(ed.u, edge);
}

void DynamicForest::remove(ElementId edge) {
  const Edge& ed = graph_->edges[edge];
  for (Vertex end : {ed.u, ed.v}) {
    auto& list = adjacency_[end];
    auto it = std::find_if(list.begin(), list.end(),
                           [edge](const auto& entry) { return entry.second == edge; });
    if (it != list.end()) {
      *it = list.back();
      list.pop_back();
    }
  }
}

bool DynamicForest::path(Vertex a, Vertex b, std::vector<ElementId>& out) const {
  out.clear();
  if (a == b) return true;
  // Iterative DFS from a, remembering the tree edge used to reach each vertex.
  ++stamp_;
  std::vector<Vertex> stack{a};
  seen_stamp_[a] = stamp_;
  bool found = false;
  while (!stack.empty() && !found) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const auto& [next, edge] : adjacency_[x]) {
      if (seen_stamp_[next] == stamp_) continue;
      seen_stamp_[next] = stamp_;
      via_edge_[next] = edge;
      if (next == b) {
        found = true;
        break;
      }
      stack.push_back(next);
    }
  }
  if (!found) return false;
  for (Vertex x = b; x != a;) {
    const ElementId edge = via_edge_[x];
    out.push_back(edge);
    const Edge& ed = graph_->edges[edge];
    x = ed.u == x ? ed.v : ed.u;
  }
  return true;
}

namespace {

class UnionFindSet final : public GrowingSet {
 public:
  explicit UnionFindSet(const Graph& graph)
      : graph_(graph), components_(graph.vertex_count), members_(graph.edge_count()) {}

  bool can_add(ElementId e) const override {
    const Edge& ed = graph_.edges[e];
    return !members_.contains(e) && components_.find(ed.u) != components_.find(ed.v);
  }
  void add(ElementId e) override {
    const Edge& ed = graph_.edges[e];
    components_.unite(ed.u, ed.v);
    members_.insert(e);
  }
  const ElementSet& members() const override { return members_; }

 private:
  const Graph& graph_;
  // find() compresses paths, which is not observable from outside.
  mutable UnionFind components_;
  ElementSet members_;
};

class ForestExchangeSet final : public ExchangeSet {
 public:
  explicit ForestExchangeSet(const Graph& graph)
      : graph_(graph), forest_(graph), members_(graph.edge_count()) {}

  std::vector<ElementId> circuit_with(ElementId e) const override {
    const Edge& ed = graph_.edges[e];
    std::vector<ElementId> cycle;
    if (!forest_.path(ed.u, ed.v, cycle)) return {};
    cycle.push_back(e);
    std::sort(cycle.begin(), cycle.end());
    return cycle;
  }
  void add(ElementId e) override {
    forest_.add(e);
    members_.insert(e);
  }
  void remove(ElementId e) override {
    forest_.remove(e);
    members_.erase(e);
  }
  const ElementSet& members() const override { return members_; }

 private:
  const Graph& graph_;
  DynamicForest forest_;
  ElementSet members_;
};

}  // namespace

GraphicOracle::GraphicOracle(std::shared_ptr<const Graph> graph) : graph_(std::move(graph)) {}

bool GraphicOracle::is_independent(const ElementSet& set) const {
  UnionFind components(graph_->vertex_count);
  for (ElementId e : set) {
    const Edge& ed = graph_->edges[e];
    if (!components.unite(ed.u, ed.v)) return false;
  }
  return true;
}

ElementSet GraphicOracle::circuit_of(const ElementSet& forest, ElementId e) const {
  return cycle_through(forest, e, *graph_);
}

std::unique_ptr<GrowingSet> GraphicOracle::make_growing_set() const {
  return std::make_unique<UnionFindSet>(*graph_);
}

std::unique_ptr<ExchangeSet> GraphicOracle::make_exchange_set() const {
  return std::make_unique<ForestExchangeSet>(*graph_);
}

ElementSet cycle_through(const ElementSet& forest, ElementId e, const Graph& graph) {
  if (e >= graph.edge_count()) {
    throw Error(ErrorCode::kPreconditionViolated, "edge out of range");
  }
  DynamicForest tree(graph);
  for (ElementId f : forest) {
    if (f != e) tree.add(f);
  }
  const Edge& ed = graph.edges[e];
  std::vector<ElementId> path;
  if (!tree.path(ed.u, ed.v, path)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "endpoints of edge " + std::to_string(e) + " are not connected in the forest");
  }
  ElementSet cycle(graph.edge_count());
  for (ElementId f : path) cycle.insert(f);
  cycle.insert(e);
  return cycle;
}

void validate_instance(const Graph& graph) {
  for (const Edge& edge : graph.edges) {
    if (edge.u >= graph.vertex_count || edge.v >= graph.vertex_count) {
      throw Error(ErrorCode::kInvalidParams, "edge endpoint out of range");
    }
  }
  if (graph.vertex_count > 0) {
    UnionFind components(graph.vertex_count);
    for (const Edge& edge : graph.edges) {
      if (edge.existing) components.unite(edge.u, edge.v);
    }
    if (components.component_count() != 1) {
      throw Error(ErrorCode::kInfeasibleInstance,
                  "existing edges leave " + std::to_string(components.component_count()) +
                      " components");
    }
  }
  std::size_t potential = 0;
  for (const Edge& edge : graph.edges) potential += edge.existing ? 0 : 1;
  const std::vector<Weight> weights = graph.weights();
  check_overflow(weights, potential);
}

}  // namespace indmst
