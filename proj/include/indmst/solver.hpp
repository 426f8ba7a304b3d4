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

#include <optional>
#include <string>
#include <vector>

#include "indmst/element_set.hpp"
#include "indmst/instance.hpp"

namespace indmst {

/// Remove `removed` from a basis and add `added`.
struct ExchangePair {
  ElementId removed = 0;
  ElementId added = 0;
  /// w(removed) - w(added).
  Weight gain = 0;

  bool operator==(const ExchangePair&) const = default;
};

/// Order of construction for the improving periods.
///
/// order[i] is built in period i + 1 and brings the minimum basis weight
/// down to step_weights[i + 1]; step_weights[0] is the weight before any
/// construction. After the last entry of `order` the weight stays at
/// ultimate_weight, so the remaining potential elements may be built in any
/// order (see full_sequence()).
struct BuildPlan {
  std::string algorithm;
  std::vector<ElementId> order;
  std::vector<ExchangePair> exchanges;
  std::vector<Weight> step_weights;
  Weight ultimate_weight = 0;
  std::size_t horizon = 0;
  Weight objective = 0;

  std::size_t improving_steps() const { return order.size(); }
};

/// Sum of step_weights plus (T - k) periods at the ultimate weight.
Weight objective_value(const BuildPlan& plan);

/// f(A): weight of a minimum-weight basis of E_0 + A.
/// Throws kPreconditionViolated if A meets E_0.
Weight f_eval(const Instance& instance, const ElementSet& added);

struct BasisUpdate {
  ElementSet basis;
  /// Element dropped from the circuit; nullopt if basis + e was independent.
  std::optional<ElementId> removed;
};

/// Minimum basis of E_0 + A + e from a minimum basis of E_0 + A by a single
/// exchange: drop the heaviest element of the circuit of basis + e (ties by
/// ascending id). Throws kPreconditionViolated if e is in E_0 or the basis.
BasisUpdate basis_update(const Instance& instance, const ElementSet& basis, ElementId e);

/// Every exchange pair (e, e') for the basis: e' outside the basis (and in
/// restrict_to, if given), e in the circuit of basis + e'. Sorted by
/// descending gain, then ascending (removed, added).
std::vector<ExchangePair> enumerate_exchange_pairs(
    const Instance& instance, const ElementSet& basis,
    const std::optional<ElementSet>& restrict_to = std::nullopt);

/// Repeatedly applies an optimal exchange pair for the current basis until
/// the ultimate weight is reached. Reference implementation, full
/// enumeration per step.
BuildPlan greedy_solve(const Instance& instance);

/// Same as greedy_solve but only exchanges into a fixed minimum-weight basis
/// of the whole matroid.
BuildPlan simplified_greedy_solve(const Instance& instance);

/// State of the one-pass solver after handling the element at `position`
/// (1-based) in weight order.
struct TraceSnapshot {
  struct ExchangeEvent {
    ElementSet circuit;
    ExchangePair pair;
  };

  std::size_t position = 0;
  ElementId element = 0;
  ElementSet x;
  ElementSet y;
  ElementSet z;
  /// Removed / added elements of all exchanges recorded so far.
  ElementSet h;
  ElementSet h_prime;
  std::optional<ExchangeEvent> event;
};

struct EfficientResult {
  BuildPlan plan;
  /// The full exchange list in application order, including trailing pairs
  /// with zero gain (weight ties), which the plan leaves out.
  std::vector<ExchangePair> exchange_list;
  ElementSet initial_basis;
  ElementSet ultimate_basis;
  std::vector<TraceSnapshot> trace;
};

/// One pass over the elements in nondecreasing weight order, building the
/// initial basis X, the ultimate basis Y and the exchange list at the same
/// time. O(|E| log |E| + r^2) oracle work; O(max(n^2, m log m)) on graphs.
EfficientResult efficient_solve(const Instance& instance, bool want_trace = false);

/// The whole construction sequence of length T: the plan's order followed by
/// the remaining potential elements in ascending id.
std::vector<ElementId> full_sequence(const Instance& instance, const BuildPlan& plan);

/// Bases X_0, ..., X_k obtained by replaying the plan's exchanges from the
/// minimum basis of E_0. Throws kInternalInvariantBroken if an exchange does
/// not yield a basis.
std::vector<ElementSet> replay_bases(const Instance& instance, const BuildPlan& plan);

}  // namespace indmst
