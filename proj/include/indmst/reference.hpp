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
#include <optional>
#include <string>
#include <vector>

#include "indmst/instance.hpp"
#include "indmst/solver.hpp"

namespace indmst {

// Exhaustive machinery for certifying solver output on small instances. Every
// value of f used here is recomputed from scratch with min_weight_basis.

inline constexpr std::size_t kDefaultBruteForceCap = 12;
inline constexpr std::size_t kDefaultExtensionCap = 6;

/// F_t = min f(A) over all t-subsets A of the potential elements.
struct FSeries {
  std::vector<Weight> values;

  Weight sum() const;
  /// Strictly decreasing up to some index, constant afterwards.
  bool well_formed() const;
  /// First index t with F_t = F_{t+1} = ... = F_T.
  std::size_t stabilization_index() const;
};

/// Minimum of sum_{i=0}^{T} f(A_i) over all construction chains, by dynamic
/// programming over subsets of potential elements.
/// Throws kCapExceeded if T > cap.
Weight brute_force_optimum(const Instance& instance, std::size_t cap = kDefaultBruteForceCap);

/// An optimal plan read back from the same subset DP. Only order and the
/// weights are filled in; `exchanges` stays empty.
BuildPlan brute_force_plan(const Instance& instance, std::size_t cap = kDefaultBruteForceCap);

/// Minimum over all T! construction orders. Second-level oracle for the DP.
/// Throws kCapExceeded if T > cap.
Weight permutation_optimum(const Instance& instance, std::size_t cap = 8);

FSeries compute_f_series(const Instance& instance, std::size_t cap = kDefaultBruteForceCap);

/// True iff plan.objective equals the sum of the F series.
bool check_lower_bound(const Instance& instance, const BuildPlan& plan,
                       std::size_t cap = kDefaultBruteForceCap);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  /// First failing position (trace checks) or exchange index.
  std::optional<std::size_t> first_violation;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Audits a trace of efficient_solve: the six per-position invariants
/// L4.1-L4.6, the final-state check C2 and the circuit check C3 at every
/// exchange event.
Report audit_trace(const Instance& instance, const std::vector<TraceSnapshot>& snapshots);

/// For every k below the stabilization index, every optimal k-set A and every
/// optimal (k+1)-set B, some e in B \ A has f(A + e) = F_{k+1}.
/// Throws kCapExceeded if T > cap.
Report check_extension_property(const Instance& instance,
                                std::size_t cap = kDefaultExtensionCap);

/// Replays an exchange list from the initial basis and checks each pair
/// against the fixed ultimate basis: it is a valid exchange pair (EX.valid),
/// its gain is the maximum over Y-restricted pairs (EX.optimal), and that
/// maximum equals the unrestricted maximum (EX.unrestricted).
Report audit_exchange_list(const Instance& instance, const ElementSet& initial_basis,
                           const ElementSet& ultimate_basis,
                           const std::vector<ExchangePair>& exchanges);

}  // namespace indmst
