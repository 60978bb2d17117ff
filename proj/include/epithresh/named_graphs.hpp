#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "epithresh/graph.hpp"

namespace epithresh {

enum class GraphFamily { karate, house, complete, cycle, path, star, complete_bipartite };

/// A built-in graph: "karate", "house", "kn:8", "cn:12", "pn:9", "sn:10",
/// "kbt:3,4".
struct NamedGraphSpec {
  GraphFamily family = GraphFamily::karate;
  std::vector<int> params;

  static NamedGraphSpec parse(std::string_view text);
  std::string to_string() const;
  /// Throws GraphError when the parameter count or values do not fit the family.
  void validate() const;
};

Graph build_named(const NamedGraphSpec& spec);

/// Zachary's karate club: 34 vertices labeled "1".."34", 78 edges.
Graph karate_graph();
/// Five-vertex house: the 4-cycle v1-v2-v5-v4-v3-v1 with chord v3v5. Labels
/// "v1".."v5".
Graph house_graph();
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,n-1}; vertex 0 is the center.
Graph star_graph(int n);
/// K_{r,s}; vertices 0..r-1 form the first class.
Graph complete_bipartite_graph(int r, int s);

}  // namespace epithresh
