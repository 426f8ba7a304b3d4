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

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>

#include "indmst/graphic.hpp"
#include "indmst/reference.hpp"
#include "indmst/solver.hpp"

namespace indmst {

/// Parses the text instance format:
///
///   p ind-mst <n> <m>
///   s <scale>                 (optional, power of ten)
///   e <u> <v> <w> <flag>      (m lines, 1-based vertices, flag 1 = existing)
///
/// Lines starting with '#' and blank lines are ignored. Weights may carry up
/// to log10(scale) decimal places and are stored multiplied by the scale.
/// The parsed graph is validated. Throws kParseError (message names the
/// line) or the validation errors.
Graph parse_instance(std::string_view text);
Graph parse_instance_file(const std::filesystem::path& path);

/// Canonical text form; parse_instance(emit_instance(g)) == g.
std::string emit_instance(const Graph& graph);

/// mt19937_64 with portable bounded draws (the standard distributions are
/// implementation-defined, this one is not).
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }
  /// Uniform double in [0, 1).
  double unit();

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  Weight weight_min = 1;
  Weight weight_max = 100;
  /// Fraction of edges marked existing; at least n - 1 are always existing.
  double e0_fraction = 0.5;
};

/// Random connected multigraph (no self-loops) whose existing edges contain a
/// random spanning tree. Deterministic per seed. Throws kInvalidParams.
Graph gen_random(const GenParams& params);

struct CorpusParams {
  std::size_t n_min = 3;
  std::size_t n_max = 7;
  std::size_t m_max = 15;
  std::size_t horizon_max = 8;
  Weight weight_min = -9;
  Weight weight_max = 9;
};

/// Small instance for exhaustive verification: n, m and T drawn from the
/// given ranges, T <= horizon_max.
Graph gen_corpus_instance(const CorpusParams& params, std::uint64_t seed);

enum class OutputFormat { kJson, kTsv };

OutputFormat parse_output_format(std::string_view name);

/// Renders a plan. The JSON form is one object (algorithm, order,
/// step_weights, objective, ultimate_weight, horizon, optional edges and
/// trace report summary); the TSV form has one row per step.
std::string emit_plan(const BuildPlan& plan, OutputFormat format, const Graph* graph = nullptr,
                      const Report* trace_report = nullptr);

/// JSON or TSV rendering of a verification report.
std::string emit_report(const Report& report, OutputFormat format);

}  // namespace indmst
