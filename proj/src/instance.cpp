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

#include "indmst/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "indmst/error.hpp"

namespace indmst {

void check_overflow(std::span<const Weight> weights, std::size_t horizon) {
  // Every basis weight is bounded by sum |w|; the objective adds T + 1 of
  // them and a gain is a difference of two weights.
  using Wide = unsigned __int128;
  Wide magnitude = 0;
  for (Weight w : weights) {
    magnitude += w < 0 ? Wide(-(w + 1)) + 1 : Wide(w);
  }
  const Wide factor = std::max<Wide>(Wide(horizon) + 1, 2);
  if (magnitude * factor > Wide(std::numeric_limits<Weight>::max())) {
    throw Error(ErrorCode::kOverflowRisk,
                "sum of |w| times " + std::to_string(static_cast<unsigned long long>(factor)) +
                    " periods exceeds the 64-bit range");
  }
}

Instance::Instance(std::shared_ptr<const MatroidOracle> oracle, std::vector<Weight> weights,
                   ElementSet existing)
    : oracle_(std::move(oracle)), weights_(std::move(weights)), existing_(std::move(existing)) {
  if (!oracle_) throw Error(ErrorCode::kInvalidParams, "missing oracle");
  const std::size_t m = oracle_->ground_size();
  if (weights_.size() != m || existing_.ground_size() != m) {
    throw Error(ErrorCode::kInvalidParams, "weights or existing set do not match the ground set");
  }
  potential_ = set_difference(ElementSet::full(m), existing_);
  const std::size_t full_rank = rank(*oracle_, ElementSet::full(m));
  const std::size_t existing_rank = rank(*oracle_, existing_);
  if (existing_rank != full_rank) {
    throw Error(ErrorCode::kInfeasibleInstance,
                "existing elements have rank " + std::to_string(existing_rank) +
                    " but the matroid has rank " + std::to_string(full_rank));
  }
  check_overflow(weights_, potential_.size());
}

Instance Instance::from_graph(Graph graph) {
  validate_instance(graph);
  auto shared = std::make_shared<const Graph>(std::move(graph));
  Instance instance(std::make_shared<GraphicOracle>(shared), shared->weights(),
                    shared->existing_set());
  instance.graph_ = std::move(shared);
  return instance;
}

}  // namespace indmst
