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

#include "indmst/solver.hpp"

#include <algorithm>
#include <string>

#include "indmst/error.hpp"

namespace indmst {
namespace {

BuildPlan assemble_plan(std::string algorithm, const Instance& instance, Weight initial_weight,
                        std::vector<ExchangePair> exchanges, Weight ultimate_weight) {
  BuildPlan plan;
  plan.algorithm = std::move(algorithm);
  plan.horizon = instance.horizon();
  plan.ultimate_weight = ultimate_weight;
  plan.step_weights.push_back(initial_weight);
  for (const ExchangePair& pair : exchanges) {
    plan.order.push_back(pair.added);
    plan.step_weights.push_back(plan.step_weights.back() - pair.gain);
  }
  plan.exchanges = std::move(exchanges);
  if (plan.step_weights.back() != ultimate_weight || plan.order.size() > plan.horizon) {
    throw Error(ErrorCode::kInternalInvariantBroken,
                plan.algorithm + " plan does not end at the ultimate weight");
  }
  plan.objective = objective_value(plan);
  return plan;
}

void check_applicable(const Instance& instance, const ElementSet& basis,
                      const ExchangePair& pair) {
  if (!basis.contains(pair.removed) || basis.contains(pair.added) ||
      instance.is_existing(pair.added)) {
    throw Error(ErrorCode::kInternalInvariantBroken,
                "exchange (" + std::to_string(pair.removed) + ", " + std::to_string(pair.added) +
                    ") does not swap a basis element for a potential element");
  }
}

ElementSet apply(const ElementSet& basis, const ExchangePair& pair) {
  ElementSet next = basis.without(pair.removed);
  next.insert(pair.added);
  return next;
}

// Heaviest element of `candidates`, ties to the smallest id. Candidates are
// visited in ascending id.
template <typename Range, typename Filter>
std::optional<ElementId> heaviest(const Range& candidates, const Instance& instance,
                                  Filter keep) {
  std::optional<ElementId> best;
  for (ElementId f : candidates) {
    if (!keep(f)) continue;
    if (!best || instance.weight(f) > instance.weight(*best)) best = f;
  }
  return best;
}

}  // namespace

Weight objective_value(const BuildPlan& plan) {
  Weight sum = 0;
  for (Weight w : plan.step_weights) sum += w;
  const auto tail = static_cast<Weight>(plan.horizon - plan.order.size());
  return sum + tail * plan.ultimate_weight;
}

Weight f_eval(const Instance& instance, const ElementSet& added) {
  if (added.ground_size() != instance.ground_size()) {
    throw Error(ErrorCode::kPreconditionViolated, "set over the wrong ground set");
  }
  for (ElementId e : added) {
    if (instance.is_existing(e)) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "element " + std::to_string(e) + " is already existing");
    }
  }
  const ElementSet basis =
      min_weight_basis(instance.oracle(), set_union(instance.existing(), added), instance.weights());
  return total_weight(basis, instance.weights());
}

BasisUpdate basis_update(const Instance& instance, const ElementSet& basis, ElementId e) {
  if (e >= instance.ground_size() || basis.contains(e) || instance.is_existing(e)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "element " + std::to_string(e) + " is already present");
  }
  BasisUpdate update{basis.with(e), std::nullopt};
  if (instance.oracle().is_independent(update.basis)) return update;
  const ElementSet circuit = instance.oracle().circuit_of(basis, e);
  const ElementId drop = *heaviest(circuit, instance, [](ElementId) { return true; });
  update.basis.erase(drop);
  update.removed = drop;
  return update;
}

std::vector<ExchangePair> enumerate_exchange_pairs(const Instance& instance,
                                                   const ElementSet& basis,
                                                   const std::optional<ElementSet>& restrict_to) {
  const MatroidOracle& oracle = instance.oracle();
  std::vector<ExchangePair> pairs;
  for (ElementId added = 0; added < instance.ground_size(); ++added) {
    if (basis.contains(added)) continue;
    if (restrict_to && !restrict_to->contains(added)) continue;
    if (oracle.is_independent(basis.with(added))) continue;
    for (ElementId removed : oracle.circuit_of(basis, added)) {
      if (removed == added) continue;
      pairs.push_back({removed, added, instance.weight(removed) - instance.weight(added)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const ExchangePair& a, const ExchangePair& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    if (a.removed != b.removed) return a.removed < b.removed;
    return a.added < b.added;
  });
  return pairs;
}

BuildPlan greedy_solve(const Instance& instance) {
  const auto& weights = instance.weights();
  ElementSet basis = min_weight_basis(instance.oracle(), instance.existing(), weights);
  const Weight initial = total_weight(basis, weights);
  const Weight ultimate = total_weight(
      min_weight_basis(instance.oracle(), ElementSet::full(instance.ground_size()), weights),
      weights);

  std::vector<ExchangePair> exchanges;
  Weight current = initial;
  while (current > ultimate) {
    const auto pairs = enumerate_exchange_pairs(instance, basis);
    if (pairs.empty() || pairs.front().gain <= 0) {
      throw Error(ErrorCode::kInternalInvariantBroken, "no improving exchange above w*");
    }
    const ExchangePair& best = pairs.front();
    check_applicable(instance, basis, best);
    basis = apply(basis, best);
    current -= best.gain;
    exchanges.push_back(best);
  }
  return assemble_plan("greedy", instance, initial, std::move(exchanges), ultimate);
}

BuildPlan simplified_greedy_solve(const Instance& instance) {
  const auto& weights = instance.weights();
  ElementSet basis = min_weight_basis(instance.oracle(), instance.existing(), weights);
  const ElementSet ultimate_basis =
      min_weight_basis(instance.oracle(), ElementSet::full(instance.ground_size()), weights);
  const Weight initial = total_weight(basis, weights);
  const Weight ultimate = total_weight(ultimate_basis, weights);

  // |Y \ X| rounds, cut short once w* is reached: with weight ties the last
  // rounds can only swap in equal-weight elements.
  const std::size_t rounds = set_difference(ultimate_basis, basis).size();
  std::vector<ExchangePair> exchanges;
  Weight current = initial;
  for (std::size_t round = 0; round < rounds && current > ultimate; ++round) {
    const auto pairs = enumerate_exchange_pairs(instance, basis, ultimate_basis);
    if (pairs.empty() || pairs.front().gain <= 0) {
      throw Error(ErrorCode::kInternalInvariantBroken, "no improving exchange into Y");
    }
    const ExchangePair& best = pairs.front();
    check_applicable(instance, basis, best);
    basis = apply(basis, best);
    current -= best.gain;
    exchanges.push_back(best);
  }
  return assemble_plan("simplified", instance, initial, std::move(exchanges), ultimate);
}

EfficientResult efficient_solve(const Instance& instance, bool want_trace) {
  const MatroidOracle& oracle = instance.oracle();
  const auto& weights = instance.weights();
  const std::size_t m = instance.ground_size();

  std::vector<ElementId> order(m);
  for (ElementId e = 0; e < m; ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return weights[a] < weights[b]; });

  auto x = oracle.make_growing_set();
  auto y = oracle.make_growing_set();
  auto z = oracle.make_exchange_set();
  std::vector<ExchangePair> exchange_list;

  EfficientResult result;
  ElementSet h(m);
  ElementSet h_prime(m);
  if (want_trace) result.trace.reserve(m);

  for (std::size_t p = 0; p < m; ++p) {
    const ElementId e = order[p];
    bool in_z = false;
    std::optional<TraceSnapshot::ExchangeEvent> event;

    if (instance.is_existing(e) && x->can_add(e)) {
      x->add(e);
      const std::vector<ElementId> circuit = z->circuit_with(e);
      z->add(e);
      in_z = true;
      if (!circuit.empty()) {
        const auto drop =
            heaviest(circuit, instance, [&](ElementId f) { return !instance.is_existing(f); });
        if (!drop) {
          throw Error(ErrorCode::kInternalInvariantBroken,
                      "circuit closed by existing element " + std::to_string(e) +
                          " has no potential element");
        }
        z->remove(*drop);
        const ExchangePair pair{e, *drop, weights[e] - weights[*drop]};
        exchange_list.push_back(pair);
        h.insert(e);
        h_prime.insert(*drop);
        if (want_trace) {
          ElementSet circuit_set(m);
          for (ElementId f : circuit) circuit_set.insert(f);
          event = TraceSnapshot::ExchangeEvent{std::move(circuit_set), pair};
        }
      }
    }
    if (y->can_add(e)) {
      y->add(e);
      if (!in_z) z->add(e);
    }

    if (want_trace) {
      result.trace.push_back(TraceSnapshot{p + 1, e, x->members(), y->members(), z->members(), h,
                                           h_prime, std::move(event)});
    }
  }

  if (x->members().size() != y->members().size()) {
    throw Error(ErrorCode::kInfeasibleInstance, "existing elements do not span the matroid");
  }

  // Nonincreasing gain; among equal gains the pair recorded last goes first.
  std::vector<std::size_t> rank_of(exchange_list.size());
  for (std::size_t i = 0; i < rank_of.size(); ++i) rank_of[i] = i;
  std::sort(rank_of.begin(), rank_of.end(), [&](std::size_t a, std::size_t b) {
    if (exchange_list[a].gain != exchange_list[b].gain) {
      return exchange_list[a].gain > exchange_list[b].gain;
    }
    return a > b;
  });
  for (std::size_t i : rank_of) result.exchange_list.push_back(exchange_list[i]);

  result.initial_basis = x->members();
  result.ultimate_basis = y->members();
  std::vector<ExchangePair> improving;
  for (const ExchangePair& pair : result.exchange_list) {
    if (pair.gain > 0) improving.push_back(pair);
  }
  result.plan = assemble_plan("efficient", instance, total_weight(result.initial_basis, weights),
                              std::move(improving), total_weight(result.ultimate_basis, weights));
  return result;
}

std::vector<ElementId> full_sequence(const Instance& instance, const BuildPlan& plan) {
  std::vector<ElementId> sequence = plan.order;
  ElementSet built(instance.ground_size());
  for (ElementId e : plan.order) built.insert(e);
  for (ElementId e : instance.potential()) {
    if (!built.contains(e)) sequence.push_back(e);
  }
  return sequence;
}

std::vector<ElementSet> replay_bases(const Instance& instance, const BuildPlan& plan) {
  std::vector<ElementSet> bases;
  bases.push_back(min_weight_basis(instance.oracle(), instance.existing(), instance.weights()));
  for (const ExchangePair& pair : plan.exchanges) {
    check_applicable(instance, bases.back(), pair);
    ElementSet next = apply(bases.back(), pair);
    if (!instance.oracle().is_independent(next)) {
      throw Error(ErrorCode::kInternalInvariantBroken,
                  "exchange (" + std::to_string(pair.removed) + ", " +
                      std::to_string(pair.added) + ") does not yield a basis");
    }
    bases.push_back(std::move(next));
  }
  return bases;
}

}  // namespace indmst
