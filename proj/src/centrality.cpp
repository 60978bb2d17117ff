#include "epithresh/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "epithresh/invariants.hpp"
#include "epithresh/parallel.hpp"

namespace epithresh {

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::spread: return "spread";
    case Measure::degree: return "degree";
    case Measure::closeness: return "closeness";
    case Measure::betweenness: return "betweenness";
    case Measure::eigenvector: return "eigenvector";
  }
  return "unknown";
}

Measure parse_measure(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown centrality measure '" + std::string(name) +
                              "' (expected spread, degree, closeness, betweenness or eigenvector)");
}

CentralityVector spread_centrality(const Graph& g, const EigenSettings& settings,
                                   std::size_t threads) {
  const std::size_t n = g.order();
  if (n < 2) throw GraphError("spread centrality needs at least 2 vertices");
  const double lambda = largest_eigenvalue(g, settings).lambda1;

  CentralityVector cv;
  cv.measure = Measure::spread;
  cv.graph_digest = g.digest();
  cv.values.resize(n);
  parallel_for(n, threads, [&](std::size_t v) {
    double deleted = 0.0;
    try {
      deleted = largest_eigenvalue(delete_vertex(g, static_cast<Vertex>(v)), settings).lambda1;
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("spread centrality of vertex '" + g.label(static_cast<Vertex>(v)) +
                                 "': " + e.what(),
                             e.estimate(), e.residual(), e.iterations());
    }
    cv.values[v] = std::clamp(lambda - deleted, 0.0, lambda);
  });
  return cv;
}

CentralityVector degree_centrality(const Graph& g) {
  CentralityVector cv;
  cv.measure = Measure::degree;
  cv.graph_digest = g.digest();
  cv.values.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) cv.values.push_back(static_cast<double>(g.degree(v)));
  return cv;
}

CentralityVector closeness_centrality(const Graph& g) {
  if (!is_connected(g)) throw GraphError("closeness centrality requires a connected graph");
  CentralityVector cv;
  cv.measure = Measure::closeness;
  cv.graph_digest = g.digest();
  cv.values.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    const long total = std::accumulate(dist.begin(), dist.end(), 0L);
    cv.values.push_back(total > 0 ? 1.0 / static_cast<double>(total) : 0.0);
  }
  return cv;
}

CentralityVector betweenness_centrality(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> score(n, 0.0);
  std::vector<double> paths(n);
  std::vector<double> dependency(n);
  std::vector<int> dist(n);
  std::vector<Vertex> visit_order;
  visit_order.reserve(n);

  for (Vertex s = 0; s < n; ++s) {
    std::fill(paths.begin(), paths.end(), 0.0);
    std::fill(dependency.begin(), dependency.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    visit_order.clear();

    std::queue<Vertex> frontier;
    paths[s] = 1.0;
    dist[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      visit_order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) paths[w] += paths[v];
      }
    }
    // Back-propagate dependencies in reverse BFS order; predecessors of w are
    // the neighbors one hop closer to s.
    for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
      const Vertex w = *it;
      for (Vertex v : g.neighbors(w)) {
        if (dist[v] == dist[w] - 1) dependency[v] += paths[v] / paths[w] * (1.0 + dependency[w]);
      }
      if (w != s) score[w] += dependency[w];
    }
  }
  // Every unordered pair was visited from both ends.
  for (double& x : score) x /= 2.0;

  CentralityVector cv;
  cv.measure = Measure::betweenness;
  cv.graph_digest = g.digest();
  cv.values = std::move(score);
  return cv;
}

CentralityVector eigenvector_centrality(const Graph& g, const EigenSettings& settings) {
  return principal_eigenvector(g, settings);
}

CentralityVector compute_centrality(Measure m, const Graph& g, const EigenSettings& settings,
                                    std::size_t threads) {
  switch (m) {
    case Measure::spread: return spread_centrality(g, settings, threads);
    case Measure::degree: return degree_centrality(g);
    case Measure::closeness: return closeness_centrality(g);
    case Measure::betweenness: return betweenness_centrality(g);
    case Measure::eigenvector: return eigenvector_centrality(g, settings);
  }
  throw std::invalid_argument("unknown centrality measure");
}

std::vector<double> fractional_ranks(const std::vector<double>& values, double tie_tolerance) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[idx[j + 1]] - values[idx[i]] <= tie_tolerance) ++j;
    const double average = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t t = i; t <= j; ++t) ranks[idx[t]] = average;
    i = j + 1;
  }
  return ranks;
}

double spearman_correlation(const CentralityVector& a, const CentralityVector& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("spearman correlation needs vectors of equal length");
  }
  if (a.graph_digest != b.graph_digest) {
    throw std::invalid_argument("spearman correlation needs vectors from the same graph");
  }
  const std::size_t n = a.values.size();
  if (n < 2) throw std::invalid_argument("spearman correlation needs at least 2 values");

  const auto ra = fractional_ranks(a.values);
  const auto rb = fractional_ranks(b.values);
  // Average ranks always sum to n(n+1)/2.
  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double cov = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cov += (ra[i] - mean) * (rb[i] - mean);
    var_a += (ra[i] - mean) * (ra[i] - mean);
    var_b += (rb[i] - mean) * (rb[i] - mean);
  }
  if (var_a == 0.0 || var_b == 0.0) {
    throw std::invalid_argument("undefined correlation: all values tied on one side");
  }
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

Ranking rank(const CentralityVector& cv, double tie_tolerance) {
  const auto& values = cv.values;
  Ranking r;
  r.order.resize(values.size());
  std::iota(r.order.begin(), r.order.end(), Vertex{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](Vertex a, Vertex b) { return values[a] > values[b]; });
  for (Vertex v : r.order) {
    if (r.tie_groups.empty() || values[r.tie_groups.back().front()] - values[v] > tie_tolerance) {
      r.tie_groups.emplace_back();
    }
    r.tie_groups.back().push_back(v);
  }
  return r;
}

}  // namespace epithresh
