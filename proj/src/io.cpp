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

#include "indmst/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "indmst/error.hpp"

namespace indmst {
namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

template <typename Int>
bool parse_int(std::string_view token, Int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

int scale_decimals(std::int64_t scale) {
  int decimals = 0;
  while (scale > 1 && scale % 10 == 0) {
    scale /= 10;
    ++decimals;
  }
  return scale == 1 ? decimals : -1;
}

// "[-]digits[.digits]" scaled by 10^decimals, exactly.
bool parse_fixed_point(std::string_view token, int decimals, Weight& out) {
  bool negative = false;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  const std::size_t dot = token.find('.');
  const std::string_view whole = token.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : token.substr(dot + 1);
  if (whole.empty() || (dot != std::string_view::npos && frac.empty())) return false;
  if (static_cast<int>(frac.size()) > decimals) return false;
  const auto digits_only = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits_only(whole) || !digits_only(frac)) return false;

  __int128 value = 0;
  const __int128 limit = std::numeric_limits<Weight>::max();
  for (char c : whole) {
    value = value * 10 + (c - '0');
    if (value > limit) return false;
  }
  for (int i = 0; i < decimals; ++i) {
    const char c = i < static_cast<int>(frac.size()) ? frac[i] : '0';
    value = value * 10 + (c - '0');
    if (value > limit) return false;
  }
  out = static_cast<Weight>(negative ? -value : value);
  return true;
}

std::string format_fixed_point(Weight value, std::int64_t scale) {
  const int decimals = scale_decimals(scale);
  if (decimals <= 0) return std::to_string(value);
  const bool negative = value < 0;
  const unsigned long long magnitude =
      negative ? 0ULL - static_cast<unsigned long long>(value) : static_cast<unsigned long long>(value);
  const auto unit = static_cast<unsigned long long>(scale);
  std::string frac = std::to_string(magnitude % unit);
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  return (negative ? "-" : "") + std::to_string(magnitude / unit) + "." + frac;
}

Graph generate(std::size_t n, std::size_t m, std::uint64_t seed, Weight weight_min,
               Weight weight_max, std::size_t existing_count) {
  Random rng(seed);
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);

  Graph graph;
  graph.vertex_count = n;
  // Random spanning tree first: each vertex hangs off an earlier one.
  for (std::size_t i = 1; i < n; ++i) {
    graph.edges.push_back({perm[i], perm[rng.index(i)], 0, true});
  }
  while (graph.edges.size() < m) {
    const Vertex u = rng.index(n);
    Vertex v = rng.index(n - 1);
    if (v >= u) ++v;
    graph.edges.push_back({u, v, 0, false});
  }
  std::vector<std::size_t> extra;
  for (std::size_t i = n == 0 ? 0 : n - 1; i < m; ++i) extra.push_back(i);
  rng.shuffle(extra);
  const std::size_t tree_edges = n == 0 ? 0 : n - 1;
  for (std::size_t i = 0; i + tree_edges < existing_count && i < extra.size(); ++i) {
    graph.edges[extra[i]].existing = true;
  }
  rng.shuffle(graph.edges);
  for (Edge& edge : graph.edges) edge.w = rng.uniform(weight_min, weight_max);
  return graph;
}

void check_gen_params(std::size_t n, std::size_t m, Weight weight_min, Weight weight_max) {
  if (n == 0) throw Error(ErrorCode::kInvalidParams, "n must be positive");
  if (m + 1 < n) throw Error(ErrorCode::kInvalidParams, "m must be at least n - 1");
  if (n == 1 && m > 0) {
    throw Error(ErrorCode::kInvalidParams, "a single vertex admits no edges without self-loops");
  }
  if (weight_min > weight_max) {
    throw Error(ErrorCode::kInvalidParams, "weight range is empty");
  }
}

}  // namespace

Graph parse_instance(std::string_view text) {
  Graph graph;
  bool have_header = false;
  bool have_scale = false;
  std::size_t declared_edges = 0;
  std::size_t line_no = 0;
  int decimals = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    const std::string_view kind = words.front();
    if (!have_header) {
      if (kind != "p" || words.size() != 4 || words[1] != "ind-mst") {
        parse_fail(line_no, "expected header 'p ind-mst <n> <m>'");
      }
      if (!parse_int(words[2], graph.vertex_count) || !parse_int(words[3], declared_edges)) {
        parse_fail(line_no, "bad vertex or edge count");
      }
      have_header = true;
      graph.edges.reserve(declared_edges);
    } else if (kind == "s") {
      if (words.size() != 2 || !graph.edges.empty() || have_scale) {
        parse_fail(line_no, "scale line must be 's <scale>', once, before the edges");
      }
      if (!parse_int(words[1], graph.scale) || graph.scale < 1 ||
          (decimals = scale_decimals(graph.scale)) < 0) {
        parse_fail(line_no, "scale must be a power of ten");
      }
      have_scale = true;
    } else if (kind == "e") {
      if (words.size() != 5) parse_fail(line_no, "expected 'e <u> <v> <w> <flag>'");
      std::size_t u = 0, v = 0;
      int flag = -1;
      Edge edge;
      if (!parse_int(words[1], u) || !parse_int(words[2], v) || u < 1 || v < 1 ||
          u > graph.vertex_count || v > graph.vertex_count) {
        parse_fail(line_no, "vertex out of range 1.." + std::to_string(graph.vertex_count));
      }
      if (!parse_fixed_point(words[3], decimals, edge.w)) {
        parse_fail(line_no, "bad weight '" + std::string(words[3]) + "'");
      }
      if (!parse_int(words[4], flag) || (flag != 0 && flag != 1)) {
        parse_fail(line_no, "flag must be 0 or 1");
      }
      if (graph.edges.size() == declared_edges) {
        parse_fail(line_no, "more than " + std::to_string(declared_edges) + " edges");
      }
      edge.u = u - 1;
      edge.v = v - 1;
      edge.existing = flag == 1;
      graph.edges.push_back(edge);
    } else {
      parse_fail(line_no, "unknown line type '" + std::string(kind) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) parse_fail(line_no, "missing header 'p ind-mst <n> <m>'");
  if (graph.edges.size() != declared_edges) {
    parse_fail(line_no, "expected " + std::to_string(declared_edges) + " edges, found " +
                            std::to_string(graph.edges.size()));
  }
  validate_instance(graph);
  return graph;
}

Graph parse_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string emit_instance(const Graph& graph) {
  std::ostringstream out;
  out << "p ind-mst " << graph.vertex_count << ' ' << graph.edge_count() << '\n';
  if (graph.scale != 1) out << "s " << graph.scale << '\n';
  for (const Edge& edge : graph.edges) {
    out << "e " << edge.u + 1 << ' ' << edge.v + 1 << ' ' << format_fixed_point(edge.w, graph.scale)
        << ' ' << (edge.existing ? 1 : 0) << '\n';
  }
  return out.str();
}

std::int64_t Random::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

double Random::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Graph gen_random(const GenParams& params) {
  check_gen_params(params.n, params.m, params.weight_min, params.weight_max);
  if (!(params.e0_fraction >= 0.0 && params.e0_fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "e0 fraction must lie in [0, 1]");
  }
  const auto wanted = static_cast<std::size_t>(std::llround(params.e0_fraction * static_cast<double>(params.m)));
  const std::size_t existing = std::clamp(wanted, params.n - 1, params.m);
  return generate(params.n, params.m, params.seed, params.weight_min, params.weight_max, existing);
}

Graph gen_corpus_instance(const CorpusParams& params, std::uint64_t seed) {
  if (params.n_min == 0 || params.n_min > params.n_max) {
    throw Error(ErrorCode::kInvalidParams, "bad vertex range");
  }
  Random rng(seed);
  const std::size_t n = static_cast<std::size_t>(rng.uniform(
      static_cast<std::int64_t>(params.n_min), static_cast<std::int64_t>(params.n_max)));
  // Horizon first so that it is spread evenly over [0, horizon_max], then
  // enough extra edges to fit it.
  const std::size_t m_lo = n - 1;
  const std::size_t m_hi = n == 1 ? 0 : std::max(m_lo, params.m_max);
  const std::size_t t_hi = std::min(params.horizon_max, m_hi - m_lo);
  const auto horizon = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(t_hi)));
  const auto m = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(m_lo + horizon),
                                                      static_cast<std::int64_t>(m_hi)));
  check_gen_params(n, m, params.weight_min, params.weight_max);
  return generate(n, m, rng.uniform(0, std::numeric_limits<std::int64_t>::max()),
                  params.weight_min, params.weight_max, m - horizon);
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "tsv") return OutputFormat::kTsv;
  throw Error(ErrorCode::kInvalidParams, "unknown output format '" + std::string(name) + "'");
}

namespace {

nlohmann::ordered_json report_json(const Report& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& check : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = check.name;
    entry["passed"] = check.passed;
    entry["checked"] = check.checked;
    if (check.first_violation) entry["first_violation"] = *check.first_violation;
    if (!check.detail.empty()) entry["detail"] = check.detail;
    checks.push_back(std::move(entry));
  }
  nlohmann::ordered_json out;
  out["passed"] = report.passed();
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace

std::string emit_plan(const BuildPlan& plan, OutputFormat format, const Graph* graph,
                      const Report* trace_report) {
  if (format == OutputFormat::kTsv) {
    std::ostringstream out;
    out << "step\telement\tweight\n";
    for (std::size_t i = 0; i < plan.step_weights.size(); ++i) {
      out << i << '\t';
      if (i == 0) {
        out << '-';
      } else if (graph != nullptr) {
        const Edge& edge = graph->edges[plan.order[i - 1]];
        out << edge.u + 1 << '-' << edge.v + 1;
      } else {
        out << plan.order[i - 1];
      }
      out << '\t' << plan.step_weights[i] << '\n';
    }
    out << "# algorithm=" << plan.algorithm << " horizon=" << plan.horizon
        << " ultimate_weight=" << plan.ultimate_weight << " objective=" << plan.objective << '\n';
    return out.str();
  }

  nlohmann::ordered_json out;
  out["algorithm"] = plan.algorithm;
  out["horizon"] = plan.horizon;
  out["order"] = plan.order;
  if (graph != nullptr) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (ElementId e : plan.order) {
      edges.push_back({graph->edges[e].u + 1, graph->edges[e].v + 1});
    }
    out["order_edges"] = std::move(edges);
    if (graph->scale != 1) out["scale"] = graph->scale;
  }
  out["step_weights"] = plan.step_weights;
  out["ultimate_weight"] = plan.ultimate_weight;
  out["objective"] = plan.objective;
  if (trace_report != nullptr) out["trace_report"] = report_json(*trace_report);
  return out.dump(2) + "\n";
}

std::string emit_report(const Report& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return report_json(report).dump(2) + "\n";
  std::ostringstream out;
  out << "check\tstatus\tchecked\tfirst_violation\tdetail\n";
  for (const CheckResult& check : report.checks) {
    out << check.name << '\t' << (check.passed ? "PASS" : "FAIL") << '\t' << check.checked << '\t'
        << (check.first_violation ? std::to_string(*check.first_violation) : "-") << '\t'
        << (check.detail.empty() ? "-" : check.detail) << '\n';
  }
  return out.str();
}

}  // namespace indmst
