#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "epithresh/graph.hpp"

namespace epithresh {

struct DegreeStats {
  std::size_t max_degree = 0;
  double average_degree = 0.0;  // 2m/n; 0 for the empty graph
  std::vector<std::size_t> degrees;
};

DegreeStats degree_stats(const Graph& g);

/// True iff g has a single connected component. The empty graph counts as
/// connected.
bool is_connected(const Graph& g);

/// Component index per vertex, numbered in order of lowest member.
std::vector<std::size_t> connected_components(const Graph& g);

/// Single-source BFS hop distances; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Exact clique number by branch and bound with Tomita pivoting.
/// Worst case is exponential in n; fine for graphs of a few hundred vertices
/// with realistic density.
std::size_t clique_number(const Graph& g);

/// Exact chromatic number: DSATUR-ordered backtracking that tests
/// k-colorability for increasing k, starting from the clique number.
/// Returns nullopt when `budget` runs out before the answer is proven.
std::optional<std::size_t> chromatic_number(
    const Graph& g, std::chrono::milliseconds budget = std::chrono::milliseconds::max());

/// A proper coloring (color per vertex) using the DSATUR greedy heuristic.
std::vector<std::size_t> dsatur_coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors);

// Structural family recognition (up to isomorphism).
bool is_regular(const Graph& g);
bool is_complete(const Graph& g);
bool is_path(const Graph& g);
bool is_star(const Graph& g);
bool is_cycle(const Graph& g);
bool is_odd_cycle(const Graph& g);

}  // namespace epithresh
