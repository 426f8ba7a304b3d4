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

#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "indmst/element_set.hpp"
#include "indmst/matroid.hpp"

namespace indmst {

using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;
  bool existing = false;

  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph. Edge index doubles as the ElementId of the edge in
/// the graphic matroid. Self-loops and parallel edges are allowed.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  /// Fixed-point scale the weights were multiplied by on load (power of ten).
  std::int64_t scale = 1;

  std::size_t edge_count() const { return edges.size(); }
  std::vector<Weight> weights() const;
  ElementSet existing_set() const;

  bool operator==(const Graph&) const = default;
};

/// Disjoint-set forest with union by rank and path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  Vertex find(Vertex x);
  /// Returns false if a and b were already connected.
  bool unite(Vertex a, Vertex b);
  bool connected(Vertex a, Vertex b) { return find(a) == find(b); }
  std::size_t component_count() const { return components_; }

 private:
  std::vector<Vertex> parent_;
  std::vector<unsigned char> rank_;
  std::size_t components_;
};

/// Forest over the vertices of a graph with edge insertion and deletion and
/// O(n) path queries. Adjacency lists only, no balancing.
class DynamicForest {
 public:
  explicit DynamicForest(const Graph& graph);

  void add(ElementId edge);
  void remove(ElementId edge);
  /// Fills `out` with the edge ids on the tree path from a to b. Returns
  /// false if a and b lie in different trees.
  bool path(Vertex a, Vertex b, std::vector<ElementId>& out) const;

 private:
  const Graph* graph_;
  std::vector<std::vector<std::pair<Vertex, ElementId>>> adjacency_;
  mutable std::vector<ElementId> via_edge_;
  mutable std::vector<std::size_t> seen_stamp_;
  mutable std::size_t stamp_ = 0;
};

/// Graphic matroid of a graph: independent sets are forests.
///
/// is_independent rebuilds a union-find per query. The incremental builders
/// keep a union-find (growing sets) or a DynamicForest (exchange sets) so the
/// one-pass solver never re-scans the whole edge set.
class GraphicOracle final : public MatroidOracle {
 public:
  explicit GraphicOracle(std::shared_ptr<const Graph> graph);

  std::size_t ground_size() const override { return graph_->edge_count(); }
  bool is_independent(const ElementSet& set) const override;
  ElementSet circuit_of(const ElementSet& forest, ElementId e) const override;
  std::unique_ptr<GrowingSet> make_growing_set() const override;
  std::unique_ptr<ExchangeSet> make_exchange_set() const override;

  const Graph& graph() const { return *graph_; }

 private:
  std::shared_ptr<const Graph> graph_;
};

/// Unique cycle in forest + e: the tree path between the endpoints of e,
/// plus e itself. Throws kPreconditionViolated if the endpoints are not
/// connected in the forest.
ElementSet cycle_through(const ElementSet& forest, ElementId e, const Graph& graph);

/// Throws kInfeasibleInstance unless the existing edges connect all
/// vertices, and kOverflowRisk if the objective could overflow Weight.
void validate_instance(const Graph& graph);

}  // namespace indmst
