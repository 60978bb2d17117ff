#include "epithresh/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <optional>

#include <fmt/format.h>

namespace epithresh {
namespace {

std::optional<long long> as_integer(const std::string& s) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

Json bound_json(const EigenBound& b) {
  Json j;
  j["value"] = b.applicable ? Json(b.value) : Json(nullptr);
  j["equality"] = b.equality;
  j["applicable"] = b.applicable;
  return j;
}

}  // namespace

Json to_json(const Provenance& p) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = p.command;
  j["graph"] = p.graph_source;
  j["graph_digest"] = hex_digest(p.graph_digest);
  j["parameters"] = p.parameters;
  return j;
}

std::string csv_comment_block(const Provenance& p) {
  std::string out = fmt::format("# {} {}\n# command: {}\n# graph: {}\n# graph_digest: {}\n",
                                kToolName, kToolVersion, p.command, p.graph_source,
                                hex_digest(p.graph_digest));
  out += "# parameters: " + p.parameters.dump() + "\n";
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_number(double x) { return fmt::format("{}", x); }

std::string hex_digest(std::uint64_t digest) { return fmt::format("{:016x}", digest); }

std::vector<Vertex> vertices_by_label(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) {
    const auto ia = as_integer(g.label(a));
    const auto ib = as_integer(g.label(b));
    if (ia && ib) return *ia < *ib;
    return g.label(a) < g.label(b);
  });
  return order;
}

Json to_json(const SpectralResult& r, bool with_eigenvector) {
  Json j;
  j["lambda1"] = r.lambda1;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  if (with_eigenvector) j["eigenvector"] = r.eigenvector;
  return j;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["lambda1"] = r.lambda1;
  j["chromatic_number"] = r.chromatic_number ? Json(*r.chromatic_number) : Json("unknown");
  Json lower;
  lower["average_degree"] = bound_json(r.average_degree);
  lower["sqrt_max_degree"] = bound_json(r.sqrt_max_degree);
  lower["chromatic_minus_one"] = bound_json(r.chromatic);
  lower["path"] = bound_json(r.path);
  Json upper;
  upper["max_degree"] = bound_json(r.max_degree);
  upper["complete"] = bound_json(r.complete);
  j["lower"] = std::move(lower);
  j["upper"] = std::move(upper);
  return j;
}

Json to_json(const LingerReport& r) {
  Json j;
  j["average_degree"] = r.average_degree;
  j["max_degree"] = r.max_degree;
  j["clique"] = r.clique;
  j["any"] = r.any();
  return j;
}

Json to_json(const VaccinationReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["measure"] = to_string(r.measure);
  j["k"] = r.removed.size();
  j["removed"] = r.removed_labels;
  j["lambda1_trajectory"] = r.lambda1_trajectory;
  j["final_lambda1"] = r.final_lambda1();
  j["tie_break"] = to_string(r.tie_break);
  j["tie_seed"] = r.tie_seed;
  return j;
}

Json to_json(const MethodSummary& s) {
  Json j;
  j["mean"] = s.mean;
  j["stddev"] = s.stddev;
  j["min"] = s.min;
  j["max"] = s.max;
  j["finals"] = s.finals;
  return j;
}

std::string centrality_csv(const Graph& g, const std::vector<CentralityVector>& columns) {
  std::string out = "vertex_label";
  for (const auto& c : columns) out += "," + std::string(to_string(c.measure));
  out += '\n';
  for (Vertex v : vertices_by_label(g)) {
    out += csv_field(g.label(v));
    for (const auto& c : columns) out += "," + format_number(c.values[v]);
    out += '\n';
  }
  return out;
}

Json centrality_json(const Graph& g, const std::vector<CentralityVector>& columns) {
  Json rows = Json::array();
  for (Vertex v : vertices_by_label(g)) {
    Json row;
    row["vertex_label"] = g.label(v);
    for (const auto& c : columns) row[std::string(to_string(c.measure))] = c.values[v];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> correlation_matrix(const std::vector<CentralityVector>& columns) {
  const std::size_t k = columns.size();
  std::vector<std::vector<double>> m(k, std::vector<double>(k, 1.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      m[i][j] = m[j][i] = spearman_correlation(columns[i], columns[j]);
    }
  }
  return m;
}

std::string curve_csv(const Graph& g, const EpidemicCurve& curve) {
  std::string out = "day,S_t";
  for (std::size_t i = 0; i < curve.per_seed.size(); ++i) {
    out += "," + csv_field("S_t_" + g.label(curve.seeds[i]));
  }
  out += '\n';
  for (std::size_t t = 0; t < curve.mean_infected.size(); ++t) {
    out += std::to_string(t + 1) + "," + format_number(curve.mean_infected[t]);
    for (const auto& row : curve.per_seed) out += "," + format_number(row[t]);
    out += '\n';
  }
  return out;
}

Json to_json(const Graph& g, const EpidemicCurve& curve) {
  const auto& cfg = curve.config;
  Json config;
  config["birth"] = cfg.params.birth;
  config["death"] = cfg.params.death;
  config["repetitions"] = cfg.repetitions;
  config["days"] = cfg.days;
  config["master_seed"] = cfg.master_seed;
  Json seeds = Json::array();
  for (Vertex v : curve.seeds) seeds.push_back(g.label(v));
  config["seed_vertices"] = cfg.seed_vertices ? std::move(seeds) : Json("all");

  Json j;
  j["config"] = std::move(config);
  j["S_t"] = curve.mean_infected;
  if (!curve.per_seed.empty()) {
    Json per_seed;
    for (std::size_t i = 0; i < curve.per_seed.size(); ++i) {
      per_seed[g.label(curve.seeds[i])] = curve.per_seed[i];
    }
    j["per_seed"] = std::move(per_seed);
  }
  return j;
}

std::string vaccination_csv(const VaccinationReport& r) {
  std::string out = "step,removed_label,lambda1\n";
  for (std::size_t i = 0; i < r.lambda1_trajectory.size(); ++i) {
    out += std::to_string(i) + "," + (i == 0 ? std::string() : csv_field(r.removed_labels[i - 1])) +
           "," + format_number(r.lambda1_trajectory[i]) + "\n";
  }
  return out;
}

HeatScores normalize_min_max(const std::vector<double>& values) {
  HeatScores h;
  if (values.empty()) return h;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  h.constant = !(range > 0.0);
  h.normalized.reserve(values.size());
  for (double x : values) h.normalized.push_back(h.constant ? 0.5 : (x - *lo) / range);
  return h;
}

std::size_t heat_step(double score) {
  const double clamped = std::clamp(score, 0.0, 1.0);
  return static_cast<std::size_t>(std::lround(clamped * 255.0));
}

std::string heat_color(double score) {
  const std::size_t i = heat_step(score);
  return fmt::format("#{:02x}00{:02x}", i, 255 - i);
}

std::string heatmap_dot(const Graph& g, const CentralityVector& cv, const Provenance& p) {
  const HeatScores heat = normalize_min_max(cv.values);
  std::string out = fmt::format("// {} {} heatmap\n// command: {}\n// graph: {}\n// parameters: {}\n",
                                kToolName, kToolVersion, p.command, p.graph_source,
                                p.parameters.dump());
  out += "graph heatmap {\n  node [style=filled];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += fmt::format("  {} [fillcolor=\"{}\", {}_value=\"{}\"];\n", dot_id(g.label(v)),
                       heat_color(heat.normalized[v]), to_string(cv.measure),
                       format_number(cv.values[v]));
  }
  for (auto [u, v] : g.edges()) {
    out += fmt::format("  {} -- {};\n", dot_id(g.label(u)), dot_id(g.label(v)));
  }
  out += "}\n";
  return out;
}

Json heatmap_json(const Graph& g, const CentralityVector& cv, const Provenance& p) {
  const HeatScores heat = normalize_min_max(cv.values);
  Json j;
  j["provenance"] = to_json(p);
  j["measure"] = to_string(cv.measure);
  j["constant"] = heat.constant;
  Json vertices = Json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    Json row;
    row["label"] = g.label(v);
    row["value"] = cv.values[v];
    row["normalized"] = heat.normalized[v];
    row["color"] = heat_color(heat.normalized[v]);
    vertices.push_back(std::move(row));
  }
  j["vertices"] = std::move(vertices);
  return j;
}

}  // namespace epithresh
