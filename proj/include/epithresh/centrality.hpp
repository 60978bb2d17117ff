#pragma once

#include <cstddef>
#include <vector>

#include "epithresh/graph.hpp"
#include "epithresh/measure.hpp"
#include "epithresh/spectral.hpp"

namespace epithresh {

/// Spread centrality: lambda_1(G) - lambda_1(G - v) for each vertex.
/// Requires n >= 2. Values are clamped into [0, lambda_1(G)], the range that
/// interlacing guarantees. The n deletions are solved on up to `threads`
/// workers (0 = default); results are indexed by vertex so the output does
/// not depend on scheduling. A solver failure names the offending vertex.
CentralityVector spread_centrality(const Graph& g, const EigenSettings& settings = {},
                                   std::size_t threads = 0);

/// Raw (unnormalized) degree.
CentralityVector degree_centrality(const Graph& g);

/// 1 / (sum of hop distances to all other vertices). Throws GraphError on a
/// disconnected graph. A single vertex scores 0.
CentralityVector closeness_centrality(const Graph& g);

/// Brandes betweenness, unnormalized, each unordered pair {s, t} counted once.
CentralityVector betweenness_centrality(const Graph& g);

/// Same as principal_eigenvector().
CentralityVector eigenvector_centrality(const Graph& g, const EigenSettings& settings = {});

inline constexpr double kTieTolerance = 1e-9;

/// 1-based ranks, ascending by value; values within `tie_tolerance` of the
/// smallest member of their run share the run's average rank.
std::vector<double> fractional_ranks(const std::vector<double>& values,
                                     double tie_tolerance = kTieTolerance);

CentralityVector compute_centrality(Measure m, const Graph& g, const EigenSettings& settings = {},
                                    std::size_t threads = 0);

/// Spearman's rho as the Pearson correlation of average ranks. Throws
/// std::invalid_argument for mismatched inputs, n < 2, or a side whose values
/// are all tied.
double spearman_correlation(const CentralityVector& a, const CentralityVector& b);

struct Ranking {
  std::vector<Vertex> order;                   // descending by value, stable
  std::vector<std::vector<Vertex>> tie_groups;  // consecutive runs in `order`
};

/// Descending stable order. A tie group collects consecutive vertices whose
/// values are within `tie_tolerance` of the group's leading value.
Ranking rank(const CentralityVector& cv, double tie_tolerance = kTieTolerance);

}  // namespace epithresh
