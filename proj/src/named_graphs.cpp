#include "epithresh/named_graphs.hpp"

#include <array>
#include <charconv>

namespace epithresh {
namespace {

// 0-based endpoints; vertex i carries label i + 1.
constexpr std::array<std::array<Vertex, 2>, 78> kKarateEdges = {{
    {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},
    {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},
    {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},  {1, 19},  {1, 21},  {1, 30},
    {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},  {2, 28},  {2, 32},
    {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
    {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33},
    {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
    {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25}, {24, 27},
    {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
    {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
}};

struct FamilyInfo {
  GraphFamily family;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<FamilyInfo, 7> kFamilies = {{
    {GraphFamily::karate, "karate", 0},
    {GraphFamily::house, "house", 0},
    {GraphFamily::complete, "kn", 1},
    {GraphFamily::cycle, "cn", 1},
    {GraphFamily::path, "pn", 1},
    {GraphFamily::star, "sn", 1},
    {GraphFamily::complete_bipartite, "kbt", 2},
}};

const FamilyInfo& info(GraphFamily family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f;
  }
  throw GraphError("unknown graph family");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw GraphError(message);
}

}  // namespace

NamedGraphSpec NamedGraphSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  NamedGraphSpec spec;
  bool found = false;
  for (const auto& f : kFamilies) {
    if (f.name == name) {
      spec.family = f.family;
      found = true;
    }
  }
  require(found, "unknown named graph '" + std::string(text) +
                     "' (expected karate, house, kn:N, cn:N, pn:N, sn:N or kbt:R,S)");
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    for (;;) {
      const auto comma = rest.find(',');
      const std::string_view token = rest.substr(0, comma);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      require(ec == std::errc() && ptr == token.data() + token.size() && !token.empty(),
              "bad integer '" + std::string(token) + "' in graph spec '" + std::string(text) + "'");
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  spec.validate();
  return spec;
}

std::string NamedGraphSpec::to_string() const {
  std::string out(info(family).name);
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += std::to_string(params[i]);
  }
  return out;
}

void NamedGraphSpec::validate() const {
  const auto& f = info(family);
  require(params.size() == f.arity, "graph family '" + std::string(f.name) + "' takes " +
                                        std::to_string(f.arity) + " parameter(s), got " +
                                        std::to_string(params.size()));
  for (int p : params) require(p >= 1, "graph parameters must be >= 1");
  switch (family) {
    case GraphFamily::cycle:
      require(params[0] >= 3, "cycle needs at least 3 vertices");
      break;
    case GraphFamily::star:
      require(params[0] >= 2, "star needs at least 2 vertices");
      break;
    default:
      break;
  }
}

Graph build_named(const NamedGraphSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case GraphFamily::karate: return karate_graph();
    case GraphFamily::house: return house_graph();
    case GraphFamily::complete: return complete_graph(spec.params[0]);
    case GraphFamily::cycle: return cycle_graph(spec.params[0]);
    case GraphFamily::path: return path_graph(spec.params[0]);
    case GraphFamily::star: return star_graph(spec.params[0]);
    case GraphFamily::complete_bipartite:
      return complete_bipartite_graph(spec.params[0], spec.params[1]);
  }
  throw GraphError("unknown graph family");
}

Graph karate_graph() {
  std::vector<Edge> edges;
  edges.reserve(kKarateEdges.size());
  for (const auto& e : kKarateEdges) edges.emplace_back(e[0], e[1]);
  std::vector<std::string> labels;
  for (int i = 1; i <= 34; ++i) labels.push_back(std::to_string(i));
  return Graph::from_edges(34, edges, std::move(labels));
}

Graph house_graph() {
  // v1v2, v1v3, v2v5, v3v4, v4v5, v3v5
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}, {2, 4}};
  return Graph::from_edges(5, edges, {"v1", "v2", "v3", "v4", "v5"});
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph star_graph(int n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph complete_bipartite_graph(int r, int s) {
  require(r >= 1 && s >= 1, "complete bipartite graph needs r, s >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < r; ++u) {
    for (int v = 0; v < s; ++v) edges.emplace_back(u, r + v);
  }
  return Graph::from_edges(static_cast<std::size_t>(r + s), edges);
}

}  // namespace epithresh
