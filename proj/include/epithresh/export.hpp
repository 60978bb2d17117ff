#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "epithresh/centrality.hpp"
#include "epithresh/epidemic.hpp"
#include "epithresh/graph.hpp"
#include "epithresh/sis.hpp"
#include "epithresh/spectral.hpp"
#include "epithresh/vaccinate.hpp"

namespace epithresh {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "epithresh";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Enough to rerun a command: which graph, every parameter, every seed.
struct Provenance {
  std::string command;
  std::string graph_source;  // named spec or input path
  std::uint64_t graph_digest = 0;
  Json parameters = Json::object();
};

Json to_json(const Provenance& p);
/// "# key: value" lines for the top of a CSV file.
std::string csv_comment_block(const Provenance& p);

/// RFC 4180 field: quoted when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view s);
/// Shortest decimal string that reads back to the same double.
std::string format_number(double x);
std::string hex_digest(std::uint64_t digest);

/// Vertex ids ordered by label: numerically when both labels are integers,
/// otherwise lexicographically.
std::vector<Vertex> vertices_by_label(const Graph& g);

Json to_json(const SpectralResult& r, bool with_eigenvector = false);
Json to_json(const BoundsReport& r);
Json to_json(const LingerReport& r);
Json to_json(const VaccinationReport& r);
Json to_json(const MethodSummary& s);

/// vertex_label, then one column per vector, rows ordered by label.
std::string centrality_csv(const Graph& g, const std::vector<CentralityVector>& columns);
Json centrality_json(const Graph& g, const std::vector<CentralityVector>& columns);

/// Symmetric matrix; entry (i, j) is spearman_correlation(columns[i], columns[j]).
std::vector<std::vector<double>> correlation_matrix(const std::vector<CentralityVector>& columns);

/// `day,S_t` plus one `S_t_<label>` column per seed when per-seed curves were
/// recorded. Days are 1-based.
std::string curve_csv(const Graph& g, const EpidemicCurve& curve);
Json to_json(const Graph& g, const EpidemicCurve& curve);

/// step,removed_label,lambda1 with step 0 being the intact graph.
std::string vaccination_csv(const VaccinationReport& r);

struct HeatScores {
  std::vector<double> normalized;  // in [0, 1]
  bool constant = false;           // all inputs equal; every score is 0.5
};

/// Min-max normalization; a constant vector maps to the mid-point 0.5.
HeatScores normalize_min_max(const std::vector<double>& values);

/// Step of the 256-color blue-to-red ramp for a score in [0, 1]; step i is
/// rgb(i, 0, 255 - i).
std::size_t heat_step(double score);
std::string heat_color(double score);

/// Undirected DOT graph with a filled node per vertex colored by `cv`.
std::string heatmap_dot(const Graph& g, const CentralityVector& cv, const Provenance& p);
Json heatmap_json(const Graph& g, const CentralityVector& cv, const Provenance& p);

}  // namespace epithresh
