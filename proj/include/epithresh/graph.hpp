#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epithresh {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counts of input edges discarded while building a simple graph.
struct DropCounts {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Vertices are dense ids 0..n-1; each carries a string label (the token it
/// had in the source file, or its decimal id for generated graphs). Neighbor
/// lists are strictly increasing.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Self-loops and repeated edges are
  /// dropped and tallied in `dropped` when non-null. `labels` is either
  /// empty (decimal ids are used) or of length n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {},
                          DropCounts* dropped = nullptr);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// 64-bit FNV-1a digest over labels and adjacency; identifies the graph in
  /// provenance records and centrality vectors.
  std::uint64_t digest() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
};

/// G - v: removes `v` and renumbers the remaining vertices densely,
/// preserving their labels and relative order.
Graph delete_vertex(const Graph& g, Vertex v);

/// Removes every vertex in `removed` (duplicates are an error).
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);

}  // namespace epithresh
