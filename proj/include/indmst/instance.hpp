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

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "indmst/element_set.hpp"
#include "indmst/graphic.hpp"
#include "indmst/matroid.hpp"

namespace indmst {

/// A weighted matroid with a marked set E_0 of existing elements. The rest of
/// the ground set are potential elements, one of which is built per period.
///
/// Instances are immutable after construction and may be shared across
/// concurrent solver runs.
class Instance {
 public:
  /// Validates that E_0 spans the matroid and that objective sums fit in a
  /// Weight. Throws kInfeasibleInstance / kOverflowRisk / kInvalidParams.
  Instance(std::shared_ptr<const MatroidOracle> oracle, std::vector<Weight> weights,
           ElementSet existing);

  /// Graphic instance; runs validate_instance on the graph.
  static Instance from_graph(Graph graph);

  const MatroidOracle& oracle() const { return *oracle_; }
  std::shared_ptr<const MatroidOracle> shared_oracle() const { return oracle_; }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight weight(ElementId e) const { return weights_[e]; }
  const ElementSet& existing() const { return existing_; }
  const ElementSet& potential() const { return potential_; }
  bool is_existing(ElementId e) const { return existing_.contains(e); }

  std::size_t ground_size() const { return weights_.size(); }
  /// T = |E \ E_0|.
  std::size_t horizon() const { return potential_.size(); }

  /// Set when the instance was built from a graph.
  const Graph* graph() const { return graph_.get(); }

 private:
  std::shared_ptr<const MatroidOracle> oracle_;
  std::shared_ptr<const Graph> graph_;
  std::vector<Weight> weights_;
  ElementSet existing_;
  ElementSet potential_;
};

/// Throws kOverflowRisk unless (horizon + 1) * sum |w| fits in a Weight.
void check_overflow(std::span<const Weight> weights, std::size_t horizon);

}  // namespace indmst
