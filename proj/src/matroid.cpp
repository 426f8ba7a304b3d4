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

#include "indmst/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "indmst/error.hpp"

namespace indmst {
namespace {

class OracleGrowingSet final : public GrowingSet {
 public:
  explicit OracleGrowingSet(const MatroidOracle& oracle)
      : oracle_(oracle), members_(oracle.ground_size()) {}

  bool can_add(ElementId e) const override {
    return !members_.contains(e) && oracle_.is_independent(members_.with(e));
  }
  void add(ElementId e) override { members_.insert(e); }
  const ElementSet& members() const override { return members_; }

 private:
  const MatroidOracle& oracle_;
  ElementSet members_;
};

class OracleExchangeSet final : public ExchangeSet {
 public:
  explicit OracleExchangeSet(const MatroidOracle& oracle)
      : oracle_(oracle), members_(oracle.ground_size()) {}

  std::vector<ElementId> circuit_with(ElementId e) const override {
    if (oracle_.is_independent(members_.with(e))) return {};
    return oracle_.circuit_of(members_, e).to_vector();
  }
  void add(ElementId e) override { members_.insert(e); }
  void remove(ElementId e) override { members_.erase(e); }
  const ElementSet& members() const override { return members_; }

 private:
  const MatroidOracle& oracle_;
  ElementSet members_;
};

}  // namespace

ElementSet MatroidOracle::circuit_of(const ElementSet& independent, ElementId e) const {
  // f lies on the circuit iff dropping it from independent + e kills the
  // only circuit there.
  const ElementSet with_e = independent.with(e);
  ElementSet circuit(ground_size());
  circuit.insert(e);
  for (ElementId f : independent) {
    if (is_independent(with_e.without(f))) circuit.insert(f);
  }
  return circuit;
}

std::unique_ptr<GrowingSet> MatroidOracle::make_growing_set() const {
  return std::make_unique<OracleGrowingSet>(*this);
}

std::unique_ptr<ExchangeSet> MatroidOracle::make_exchange_set() const {
  return std::make_unique<OracleExchangeSet>(*this);
}

std::size_t rank(const MatroidOracle& oracle, const ElementSet& set) {
  auto grow = oracle.make_growing_set();
  for (ElementId e : set) {
    if (grow->can_add(e)) grow->add(e);
  }
  return grow->members().size();
}

ElementSet closure(const MatroidOracle& oracle, const ElementSet& set) {
  // rank(A + e) = rank(A) iff e is spanned by a maximal independent subset.
  auto basis = oracle.make_growing_set();
  for (ElementId e : set) {
    if (basis->can_add(e)) basis->add(e);
  }
  ElementSet out(oracle.ground_size());
  for (ElementId e = 0; e < oracle.ground_size(); ++e) {
    if (set.contains(e) || !basis->can_add(e)) out.insert(e);
  }
  return out;
}

ElementSet find_circuit(const MatroidOracle& oracle, const ElementSet& independent,
                        ElementId e) {
  if (e >= oracle.ground_size()) {
    throw Error(ErrorCode::kPreconditionViolated, "element out of range");
  }
  if (independent.contains(e)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "element " + std::to_string(e) + " already in the set");
  }
  if (!oracle.is_independent(independent)) {
    throw Error(ErrorCode::kPreconditionViolated, "set is dependent");
  }
  if (oracle.is_independent(independent.with(e))) {
    throw Error(ErrorCode::kPreconditionViolated,
                "adding element " + std::to_string(e) + " creates no circuit");
  }
  return oracle.circuit_of(independent, e);
}

ElementSet min_weight_basis(const MatroidOracle& oracle, const ElementSet& restrict,
                            std::span<const Weight> weights) {
  std::vector<ElementId> order = restrict.to_vector();
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return weights[a] < weights[b]; });
  auto basis = oracle.make_growing_set();
  for (ElementId e : order) {
    if (basis->can_add(e)) basis->add(e);
  }
  return basis->members();
}

ElementId strong_exchange_witness(const MatroidOracle& oracle, const ElementSet& x_basis,
                                  const ElementSet& y_basis, ElementId e) {
  if (!x_basis.contains(e)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "element " + std::to_string(e) + " not in the first basis");
  }
  const ElementSet x_minus = x_basis.without(e);
  for (ElementId candidate : y_basis) {
    if (candidate != e && x_minus.contains(candidate)) continue;
    if (!oracle.is_independent(x_minus.with(candidate))) continue;
    ElementSet y_swapped = y_basis.without(candidate);
    if (y_swapped.contains(e) && candidate != e) continue;
    y_swapped.insert(e);
    if (oracle.is_independent(y_swapped)) return candidate;
  }
  throw Error(ErrorCode::kInternalInvariantBroken,
              "no strong exchange witness for element " + std::to_string(e));
}

UniformMatroid::UniformMatroid(std::size_t rank, std::size_t ground_size)
    : rank_(rank), ground_size_(ground_size) {}

PartitionMatroid::PartitionMatroid(std::vector<std::size_t> block_of,
                                   std::vector<std::size_t> capacity)
    : block_of_(std::move(block_of)), capacity_(std::move(capacity)) {
  for (std::size_t b : block_of_) {
    if (b >= capacity_.size()) {
      throw Error(ErrorCode::kInvalidParams, "block index out of range");
    }
  }
}

bool PartitionMatroid::is_independent(const ElementSet& set) const {
  std::vector<std::size_t> used(capacity_.size(), 0);
  for (ElementId e : set) {
    if (++used[block_of_[e]] > capacity_[block_of_[e]]) return false;
  }
  return true;
}

}  // namespace indmst
