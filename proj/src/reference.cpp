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

#include "indmst/reference.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "indmst/error.hpp"

namespace indmst {
namespace {

using Mask = std::uint32_t;

// f over every subset of the potential elements, indexed by bitmask over the
// potential elements in ascending id order.
struct SubsetTable {
  std::vector<ElementId> potential;
  std::vector<Weight> f;

  std::size_t horizon() const { return potential.size(); }
  Mask full() const { return horizon() == 0 ? 0 : (Mask{1} << horizon()) - 1; }

  ElementSet as_set(Mask mask, std::size_t ground_size) const {
    ElementSet out(ground_size);
    for (std::size_t i = 0; i < potential.size(); ++i) {
      if (mask & (Mask{1} << i)) out.insert(potential[i]);
    }
    return out;
  }
};

void check_cap(const Instance& instance, std::size_t cap) {
  if (instance.horizon() > cap) {
    throw Error(ErrorCode::kCapExceeded, "horizon " + std::to_string(instance.horizon()) +
                                             " exceeds the exhaustive cap " + std::to_string(cap));
  }
}

SubsetTable tabulate(const Instance& instance, std::size_t cap) {
  check_cap(instance, std::min<std::size_t>(cap, 30));
  SubsetTable table;
  table.potential = instance.potential().to_vector();
  table.f.resize(std::size_t{1} << table.horizon());
  for (Mask mask = 0; mask <= table.full(); ++mask) {
    const ElementSet edges =
        set_union(instance.existing(), table.as_set(mask, instance.ground_size()));
    table.f[mask] = total_weight(min_weight_basis(instance.oracle(), edges, instance.weights()),
                                 instance.weights());
    if (mask == table.full()) break;
  }
  return table;
}

// best[A] = f(A) + min over e not in A of best[A + e]; best[full] = f(full).
std::vector<Weight> chain_dp(const SubsetTable& table) {
  std::vector<Weight> best(table.f.size());
  const Mask full = table.full();
  for (Mask mask = full + 1; mask-- > 0;) {
    Weight tail = 0;
    if (mask != full) {
      tail = std::numeric_limits<Weight>::max();
      for (std::size_t i = 0; i < table.horizon(); ++i) {
        const Mask bit = Mask{1} << i;
        if (!(mask & bit)) tail = std::min(tail, best[mask | bit]);
      }
    }
    best[mask] = table.f[mask] + tail;
  }
  return best;
}

std::string describe(const ElementSet& set) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (ElementId e : set) {
    out << (first ? "" : ",") << e;
    first = false;
  }
  out << '}';
  return out.str();
}

class CheckRecorder {
 public:
  explicit CheckRecorder(std::string name) { result_.name = std::move(name); }

  void record(bool ok, std::size_t where, const std::string& detail_if_failed) {
    ++result_.checked;
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.first_violation = where;
    result_.detail = detail_if_failed;
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

}  // namespace

Weight FSeries::sum() const { return std::accumulate(values.begin(), values.end(), Weight{0}); }

std::size_t FSeries::stabilization_index() const {
  if (values.empty()) return 0;
  std::size_t t = values.size() - 1;
  while (t > 0 && values[t - 1] == values.back()) --t;
  return t;
}

bool FSeries::well_formed() const {
  const std::size_t t = stabilization_index();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (i < t && !(values[i] > values[i + 1])) return false;
    if (i >= t && values[i] != values[i + 1]) return false;
  }
  return true;
}

Weight brute_force_optimum(const Instance& instance, std::size_t cap) {
  check_cap(instance, cap);
  return chain_dp(tabulate(instance, cap)).front();
}

BuildPlan brute_force_plan(const Instance& instance, std::size_t cap) {
  check_cap(instance, cap);
  const SubsetTable table = tabulate(instance, cap);
  const std::vector<Weight> best = chain_dp(table);
  const Weight ultimate = table.f[table.full()];

  BuildPlan plan;
  plan.algorithm = "brute";
  plan.horizon = table.horizon();
  plan.ultimate_weight = ultimate;
  Mask mask = 0;
  plan.step_weights.push_back(table.f[mask]);
  while (table.f[mask] != ultimate) {
    std::size_t pick = table.horizon();
    for (std::size_t i = 0; i < table.horizon(); ++i) {
      const Mask bit = Mask{1} << i;
      if (mask & bit) continue;
      if (pick == table.horizon() || best[mask | bit] < best[mask | (Mask{1} << pick)]) pick = i;
    }
    mask |= Mask{1} << pick;
    plan.order.push_back(table.potential[pick]);
    plan.step_weights.push_back(table.f[mask]);
  }
  plan.objective = objective_value(plan);
  if (plan.objective != best.front()) {
    throw Error(ErrorCode::kInternalInvariantBroken, "optimal chain is not monotone");
  }
  return plan;
}

Weight permutation_optimum(const Instance& instance, std::size_t cap) {
  check_cap(instance, cap);
  const SubsetTable table = tabulate(instance, cap);
  std::vector<std::size_t> perm(table.horizon());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Weight optimum = std::numeric_limits<Weight>::max();
  do {
    Mask mask = 0;
    Weight sum = table.f[mask];
    for (std::size_t i : perm) {
      mask |= Mask{1} << i;
      sum += table.f[mask];
    }
    optimum = std::min(optimum, sum);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return optimum;
}

FSeries compute_f_series(const Instance& instance, std::size_t cap) {
  check_cap(instance, cap);
  const SubsetTable table = tabulate(instance, cap);
  FSeries series;
  series.values.assign(table.horizon() + 1, std::numeric_limits<Weight>::max());
  for (Mask mask = 0; mask < table.f.size(); ++mask) {
    auto& slot = series.values[std::popcount(mask)];
    slot = std::min(slot, table.f[mask]);
  }
  return series;
}

bool check_lower_bound(const Instance& instance, const BuildPlan& plan, std::size_t cap) {
  return plan.objective == compute_f_series(instance, cap).sum();
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(const std::string& name) const {
  for (const CheckResult& check : checks) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

Report check_extension_property(const Instance& instance, std::size_t cap) {
  check_cap(instance, cap);
  const SubsetTable table = tabulate(instance, cap);
  FSeries series;
  series.values.assign(table.horizon() + 1, std::numeric_limits<Weight>::max());
  for (Mask mask = 0; mask < table.f.size(); ++mask) {
    auto& slot = series.values[std::popcount(mask)];
    slot = std::min(slot, table.f[mask]);
  }

  CheckRecorder shape("F.shape");
  shape.record(series.well_formed(), 0, "F series is not strictly decreasing then constant");

  CheckRecorder extension("L3");
  const std::size_t t = series.stabilization_index();
  std::vector<std::vector<Mask>> optimal(table.horizon() + 1);
  for (Mask mask = 0; mask < table.f.size(); ++mask) {
    const auto level = static_cast<std::size_t>(std::popcount(mask));
    if (table.f[mask] == series.values[level]) optimal[level].push_back(mask);
  }
  for (std::size_t k = 0; k < t; ++k) {
    const Weight target = series.values[k + 1];
    for (Mask a : optimal[k]) {
      for (Mask b : optimal[k + 1]) {
        bool found = false;
        for (Mask rest = b & ~a; rest != 0 && !found; rest &= rest - 1) {
          found = table.f[a | (rest & (~rest + 1))] == target;
        }
        extension.record(found, k,
                         "no extension of A=" + describe(table.as_set(a, instance.ground_size())) +
                             " from B=" + describe(table.as_set(b, instance.ground_size())));
      }
    }
  }
  return Report{{shape.take(), extension.take()}};
}

Report audit_trace(const Instance& instance, const std::vector<TraceSnapshot>& snapshots) {
  const MatroidOracle& oracle = instance.oracle();
  const ElementSet& potential = instance.potential();
  const std::size_t m = instance.ground_size();

  CheckRecorder shape("trace.shape");
  CheckRecorder l1("L4.1"), l2("L4.2"), l3("L4.3"), l4("L4.4"), l5("L4.5"), l6("L4.6");
  CheckRecorder c2("C2"), c3("C3");

  shape.record(snapshots.size() == m, 0,
               "expected " + std::to_string(m) + " snapshots, got " +
                   std::to_string(snapshots.size()));
  ElementSet removed(m);
  ElementSet added(m);
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    const TraceSnapshot& s = snapshots[i];
    const std::size_t p = s.position;
    shape.record(p == i + 1, p, "positions are not consecutive from 1");

    l1.record(s.x.is_subset_of(s.z) && s.z.is_subset_of(set_union(s.x, s.y)), p,
              "X^p subset Z^p subset X^p u Y^p fails");
    l2.record(closure(oracle, s.y) == closure(oracle, s.z), p, "cl(Y^p) != cl(Z^p)");
    l3.record(set_difference(s.y, s.x).is_subset_of(potential), p,
              "Y^p \\ X^p contains an existing element");
    l4.record(oracle.is_independent(s.x) && oracle.is_independent(s.y) &&
                  oracle.is_independent(s.z),
              p, "X^p, Y^p or Z^p is dependent");
    l5.record(set_difference(s.x, s.y) == s.h, p,
              "X^p \\ Y^p = " + describe(set_difference(s.x, s.y)) + " but H^p = " +
                  describe(s.h));
    l6.record(set_difference(s.y, s.z) == s.h_prime, p,
              "Y^p \\ Z^p = " + describe(set_difference(s.y, s.z)) + " but H'^p = " +
                  describe(s.h_prime));
    if (s.event) {
      removed.insert(s.event->pair.removed);
      added.insert(s.event->pair.added);
      ElementSet expected(m);
      expected.insert(s.event->pair.added);
      c3.record(set_intersection(s.event->circuit, s.h_prime) == expected, p,
                "C_i n H'^p = " + describe(set_intersection(s.event->circuit, s.h_prime)));
    }
  }
  if (!snapshots.empty()) {
    const TraceSnapshot& last = snapshots.back();
    c2.record(last.x == last.z, last.position, "X != Z after the scan");
    c2.record(set_difference(last.x, last.y) == removed, last.position,
              "X \\ Y differs from the removed elements of the exchange list");
    c2.record(set_difference(last.y, last.x) == added, last.position,
              "Y \\ X differs from the added elements of the exchange list");
  }
  return Report{{shape.take(), l1.take(), l2.take(), l3.take(), l4.take(), l5.take(), l6.take(),
                 c2.take(), c3.take()}};
}

Report audit_exchange_list(const Instance& instance, const ElementSet& initial_basis,
                           const ElementSet& ultimate_basis,
                           const std::vector<ExchangePair>& exchanges) {
  const MatroidOracle& oracle = instance.oracle();
  CheckRecorder valid("EX.valid"), optimal("EX.optimal"), unrestricted("EX.unrestricted");
  ElementSet basis = initial_basis;
  for (std::size_t i = 0; i < exchanges.size(); ++i) {
    const ExchangePair& pair = exchanges[i];
    const std::string tag =
        "pair " + std::to_string(i + 1) + " (" + std::to_string(pair.removed) + ", " +
        std::to_string(pair.added) + ")";
    ElementSet next = basis.without(pair.removed);
    next.insert(pair.added);
    const bool ok = basis.contains(pair.removed) && !basis.contains(pair.added) &&
                    ultimate_basis.contains(pair.added) && oracle.is_independent(next) &&
                    next.size() == basis.size() &&
                    pair.gain == instance.weight(pair.removed) - instance.weight(pair.added);
    valid.record(ok, i + 1, tag + " is not an exchange pair for (X_{i-1}, Y)");

    const auto into_y = enumerate_exchange_pairs(instance, basis, ultimate_basis);
    const auto all = enumerate_exchange_pairs(instance, basis);
    const bool has_y = !into_y.empty();
    optimal.record(has_y && pair.gain == into_y.front().gain, i + 1,
                   tag + " gain " + std::to_string(pair.gain) + " below the best " +
                       (has_y ? std::to_string(into_y.front().gain) : std::string("(none)")));
    unrestricted.record(has_y && !all.empty() && into_y.front().gain == all.front().gain, i + 1,
                        "Y-restricted maximum differs from the unrestricted one at " + tag);
    basis = std::move(next);
  }
  return Report{{valid.take(), optimal.take(), unrestricted.take()}};
}

}  // namespace indmst
