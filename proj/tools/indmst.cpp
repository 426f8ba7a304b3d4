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

// Command-line front end: solve, verify, trace, gen and bench.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indmst/error.hpp"
#include "indmst/io.hpp"
#include "indmst/reference.hpp"
#include "indmst/solver.hpp"
#include "indmst/verify.hpp"

namespace {

using namespace indmst;

constexpr int kExitCheckFailed = 1;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return 2;
    case ErrorCode::kInfeasibleInstance: return 3;
    case ErrorCode::kCapExceeded: return 4;
    case ErrorCode::kOverflowRisk: return 5;
    case ErrorCode::kInvalidParams: return 6;
    case ErrorCode::kPreconditionViolated:
    case ErrorCode::kInternalInvariantBroken: return 7;
  }
  return 7;
}

std::size_t default_cap() {
  if (const char* env = std::getenv("INDMST_CAP")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidParams, std::string("INDMST_CAP is not a number: ") + env);
    }
  }
  return kDefaultBruteForceCap;
}

struct RunConfig {
  std::string input;
  std::string algorithm = "efficient";
  std::string output = "json";
  bool trace = false;
  bool verbose = false;
  std::size_t corpus = 0;
  std::uint64_t seed = 1;
  std::size_t cap = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double e0_fraction = 0.5;
  Weight weight_min = 1;
  Weight weight_max = 100;
  std::size_t threads = 0;
};

std::string format_set(const ElementSet& set) {
  std::string out = "{";
  for (ElementId e : set) out += (out.size() > 1 ? "," : "") + std::to_string(e);
  return out + "}";
}

int cmd_solve(const RunConfig& config) {
  const Instance instance = Instance::from_graph(parse_instance_file(config.input));
  BuildPlan plan;
  Report trace_report;
  bool have_trace = false;
  if (config.algorithm == "greedy") {
    plan = greedy_solve(instance);
  } else if (config.algorithm == "simplified") {
    plan = simplified_greedy_solve(instance);
  } else if (config.algorithm == "efficient") {
    EfficientResult result = efficient_solve(instance, config.trace);
    if (config.trace) {
      trace_report = audit_trace(instance, result.trace);
      have_trace = true;
    }
    plan = std::move(result.plan);
  } else if (config.algorithm == "brute") {
    plan = brute_force_plan(instance, config.cap);
  } else {
    throw Error(ErrorCode::kInvalidParams, "unknown algorithm '" + config.algorithm + "'");
  }
  const OutputFormat format = parse_output_format(config.output);
  std::cout << emit_plan(plan, format, instance.graph(), have_trace ? &trace_report : nullptr);
  if (config.verbose && !plan.exchanges.empty()) {
    const auto bases = replay_bases(instance, plan);
    for (std::size_t i = 0; i < bases.size(); ++i) {
      std::cout << "# basis " << i << " weight " << total_weight(bases[i], instance.weights())
                << ' ' << format_set(bases[i]) << '\n';
    }
  }
  return have_trace && !trace_report.passed() ? kExitCheckFailed : 0;
}

int cmd_verify(const RunConfig& config) {
  const VerifyOptions options{config.cap, kDefaultExtensionCap};
  Report report;
  if (config.corpus > 0) {
    CorpusParams params;
    if (config.n > 0) params.n_max = config.n;
    if (config.m > 0) params.m_max = config.m;
    params.n_min = std::min(params.n_min, params.n_max);
    params.horizon_max = std::min<std::size_t>(8, config.cap);
    params.weight_min = config.weight_min;
    params.weight_max = config.weight_max;
    report = certify_corpus(params, config.corpus, config.seed, options, config.threads);
  } else {
    if (config.input.empty()) {
      throw Error(ErrorCode::kInvalidParams, "verify needs an instance file or --corpus N");
    }
    report = certify(Instance::from_graph(parse_instance_file(config.input)), options);
  }
  std::cout << emit_report(report, parse_output_format(config.output));
  return report.passed() ? 0 : kExitCheckFailed;
}

int cmd_trace(const RunConfig& config) {
  const Instance instance = Instance::from_graph(parse_instance_file(config.input));
  const EfficientResult result = efficient_solve(instance, /*want_trace=*/true);
  const Report report = audit_trace(instance, result.trace);
  const OutputFormat format = parse_output_format(config.output);
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json snapshots = nlohmann::ordered_json::array();
    for (const TraceSnapshot& s : result.trace) {
      nlohmann::ordered_json entry;
      entry["position"] = s.position;
      entry["element"] = s.element;
      entry["X"] = s.x.to_vector();
      entry["Y"] = s.y.to_vector();
      entry["Z"] = s.z.to_vector();
      entry["H"] = s.h.to_vector();
      entry["H_prime"] = s.h_prime.to_vector();
      if (s.event) {
        entry["circuit"] = s.event->circuit.to_vector();
        entry["exchange"] = {s.event->pair.removed, s.event->pair.added};
      }
      snapshots.push_back(std::move(entry));
    }
    nlohmann::ordered_json out;
    out["snapshots"] = std::move(snapshots);
    out["audit"] = nlohmann::ordered_json::parse(emit_report(report, OutputFormat::kJson));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "position\telement\tX\tY\tZ\tH\tH_prime\tcircuit\texchange\n";
    for (const TraceSnapshot& s : result.trace) {
      std::cout << s.position << '\t' << s.element << '\t' << format_set(s.x) << '\t'
                << format_set(s.y) << '\t' << format_set(s.z) << '\t' << format_set(s.h) << '\t'
                << format_set(s.h_prime) << '\t'
                << (s.event ? format_set(s.event->circuit) : "-") << '\t'
                << (s.event ? std::to_string(s.event->pair.removed) + "->" +
                                  std::to_string(s.event->pair.added)
                            : "-")
                << '\n';
    }
    std::cout << emit_report(report, OutputFormat::kTsv);
  }
  return report.passed() ? 0 : kExitCheckFailed;
}

int cmd_gen(const RunConfig& config) {
  GenParams params;
  params.n = config.n;
  params.m = config.m;
  params.seed = config.seed;
  params.weight_min = config.weight_min;
  params.weight_max = config.weight_max;
  params.e0_fraction = config.e0_fraction;
  std::cout << emit_instance(gen_random(params));
  return 0;
}

int cmd_bench(const RunConfig& config) {
  const std::size_t n = config.n > 0 ? config.n : 2000;
  const std::size_t m_max = config.m > 0 ? config.m : 200000;
  std::vector<std::size_t> ladder;
  for (std::size_t m = m_max; ladder.size() < 4 && m + 1 >= n; m /= 2) ladder.insert(ladder.begin(), m);

  std::cout << "n\tm\tseconds\tratio\tobjective\n";
  double previous = 0.0;
  for (std::size_t m : ladder) {
    GenParams params{n, m, config.seed, config.weight_min, config.weight_max, config.e0_fraction};
    const Instance instance = Instance::from_graph(gen_random(params));
    const auto start = std::chrono::steady_clock::now();
    const EfficientResult result = efficient_solve(instance);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << n << '\t' << m << '\t' << std::fixed << std::setprecision(4) << seconds << '\t';
    if (previous > 0.0) {
      std::cout << std::setprecision(2) << seconds / previous;
    } else {
      std::cout << '-';
    }
    std::cout << '\t' << result.plan.objective << '\n';
    previous = seconds;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental network design with minimum spanning trees"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", config.output, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", config.cap, "largest horizon for exhaustive checks (env INDMST_CAP)");
  };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weight-min", config.weight_min, "smallest generated weight");
    sub->add_option("--weight-max", config.weight_max, "largest generated weight");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("input", config.input, "instance file")->required();
  solve->add_option("--algorithm", config.algorithm, "greedy, simplified, efficient or brute")
      ->check(CLI::IsMember({"greedy", "simplified", "efficient", "brute"}));
  solve->add_flag("--trace", config.trace, "audit the one-pass trace (efficient only)");
  solve->add_flag("--verbose", config.verbose, "print every intermediate basis");
  add_output(solve);
  add_cap(solve);

  CLI::App* verify = app.add_subcommand("verify", "certify solver output exhaustively");
  verify->add_option("input", config.input, "instance file");
  verify->add_option("--corpus", config.corpus, "verify N generated instances instead");
  verify->add_option("--seed", config.seed, "first corpus seed");
  verify->add_option("--n", config.n, "largest vertex count in the corpus (default 7)");
  verify->add_option("--m", config.m, "largest edge count in the corpus (default 15)");
  verify->add_option("--threads", config.threads, "corpus workers (default: all cores)");
  add_output(verify);
  add_cap(verify);
  add_weights(verify);

  CLI::App* trace = app.add_subcommand("trace", "print and audit the one-pass trace");
  trace->add_option("input", config.input, "instance file")->required();
  add_output(trace);

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", config.n, "vertices")->required();
  gen->add_option("--m", config.m, "edges")->required();
  gen->add_option("--seed", config.seed, "random seed");
  gen->add_option("--e0-fraction", config.e0_fraction, "fraction of existing edges");
  add_weights(gen);

  CLI::App* bench = app.add_subcommand("bench", "time the one-pass solver over an m ladder");
  bench->add_option("--n", config.n, "vertices (default 2000)");
  bench->add_option("--m", config.m, "largest edge count (default 200000)");
  bench->add_option("--seed", config.seed, "random seed");
  bench->add_option("--e0-fraction", config.e0_fraction, "fraction of existing edges");
  add_weights(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (config.cap == 0) config.cap = default_cap();
    if (solve->parsed()) return cmd_solve(config);
    if (verify->parsed()) {
      if (verify->count("--weight-min") == 0) config.weight_min = -9;
      if (verify->count("--weight-max") == 0) config.weight_max = 9;
      return cmd_verify(config);
    }
    if (trace->parsed()) return cmd_trace(config);
    if (gen->parsed()) return cmd_gen(config);
    if (bench->parsed()) {
      if (bench->count("--weight-max") == 0) config.weight_max = 1000000;
      return cmd_bench(config);
    }
  } catch (const Error& e) {
    std::cerr << "indmst: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return 0;
}
