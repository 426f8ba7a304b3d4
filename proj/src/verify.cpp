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

#include "indmst/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "indmst/error.hpp"
#include "indmst/solver.hpp"

namespace indmst {

Report certify(const Instance& instance, const VerifyOptions& options) {
  if (instance.horizon() > options.cap) {
    throw Error(ErrorCode::kCapExceeded, "horizon " + std::to_string(instance.horizon()) +
                                             " exceeds the verification cap " +
                                             std::to_string(options.cap));
  }
  const BuildPlan greedy = greedy_solve(instance);
  const BuildPlan simplified = simplified_greedy_solve(instance);
  const EfficientResult efficient = efficient_solve(instance, /*want_trace=*/true);
  const Weight optimum = brute_force_optimum(instance, options.cap);
  const FSeries series = compute_f_series(instance, options.cap);

  Report report;
  CheckResult equal{"objective.equal", true, 4, std::nullopt, ""};
  for (const BuildPlan* plan : {&greedy, &simplified, &efficient.plan}) {
    if (plan->objective != optimum && equal.passed) {
      equal.passed = false;
      equal.detail = plan->algorithm + " objective " + std::to_string(plan->objective) +
                     " != optimum " + std::to_string(optimum);
    }
  }
  report.checks.push_back(std::move(equal));

  CheckResult bound{"lower_bound", true, 4, std::nullopt, ""};
  for (Weight objective : {greedy.objective, simplified.objective, efficient.plan.objective, optimum}) {
    if (objective != series.sum() && bound.passed) {
      bound.passed = false;
      bound.detail = "objective " + std::to_string(objective) + " != sum F_t " +
                     std::to_string(series.sum());
    }
  }
  report.checks.push_back(std::move(bound));

  if (instance.horizon() <= options.extension_cap) {
    for (CheckResult& check : check_extension_property(instance, options.extension_cap).checks) {
      report.checks.push_back(std::move(check));
    }
  } else {
    report.checks.push_back({"L3", true, 0, std::nullopt, "skipped: horizon above extension cap"});
  }
  for (CheckResult& check : audit_trace(instance, efficient.trace).checks) {
    report.checks.push_back(std::move(check));
  }
  for (CheckResult& check : audit_exchange_list(instance, efficient.initial_basis,
                                                efficient.ultimate_basis, efficient.exchange_list)
                                .checks) {
    report.checks.push_back(std::move(check));
  }
  return report;
}

Report certify_corpus(const CorpusParams& params, std::size_t count, std::uint64_t seed,
                      const VerifyOptions& options, std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));

  std::vector<Report> reports(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        reports[i] = certify(Instance::from_graph(gen_corpus_instance(params, seed + i)), options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();

  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  // Merge in seed order so the result does not depend on scheduling.
  Report merged;
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < count; ++i) {
    for (const CheckResult& check : reports[i].checks) {
      auto [it, inserted] = slot.try_emplace(check.name, merged.checks.size());
      if (inserted) merged.checks.push_back({check.name, true, 0, std::nullopt, ""});
      CheckResult& total = merged.checks[it->second];
      total.checked += check.checked;
      if (!check.passed && total.passed) {
        total.passed = false;
        total.first_violation = static_cast<std::size_t>(seed + i);
        total.detail = "seed " + std::to_string(seed + i) + ": " + check.detail;
      }
    }
  }
  return merged;
}

}  // namespace indmst
