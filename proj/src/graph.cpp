#include "epithresh/graph.hpp"

#include <algorithm>

namespace epithresh {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels, DropCounts* dropped) {
  if (!labels.empty() && labels.size() != n) {
    throw GraphError("label count " + std::to_string(labels.size()) +
                     " does not match vertex count " + std::to_string(n));
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }

  DropCounts counts;
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a vertex outside 0.." + std::to_string(n));
    }
    if (u == v) {
      ++counts.self_loops;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  const auto unique_end = std::unique(canon.begin(), canon.end());
  counts.duplicate_edges = static_cast<std::size_t>(canon.end() - unique_end);
  canon.erase(unique_end, canon.end());
  if (dropped != nullptr) *dropped = counts;

  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (u, v): vertex w first receives every smaller
  // neighbor u in increasing order, then every larger neighbor v in
  // increasing order, so lists come out sorted without a second pass.
  for (auto [u, v] : canon) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::digest() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix_byte = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  auto mix_u64 = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>(x >> (8 * i)));
  };
  mix_u64(order());
  for (const auto& l : labels_) {
    mix_u64(l.size());
    for (char c : l) mix_byte(static_cast<unsigned char>(c));
  }
  for (auto [u, v] : edges()) {
    mix_u64(u);
    mix_u64(v);
  }
  return h;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  const Vertex removed[] = {v};
  return delete_vertices(g, removed);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.order();
  constexpr Vertex kGone = static_cast<Vertex>(-1);
  std::vector<Vertex> remap(n, 0);
  for (Vertex v : removed) {
    if (v >= n) {
      throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                       std::to_string(n));
    }
    if (remap[v] == kGone) throw GraphError("vertex " + std::to_string(v) + " removed twice");
    remap[v] = kGone;
  }
  std::vector<std::string> labels;
  labels.reserve(n - removed.size());
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (remap[v] == kGone) continue;
    remap[v] = next++;
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (remap[u] != kGone && remap[v] != kGone) edges.emplace_back(remap[u], remap[v]);
  }
  const std::size_t remaining = labels.size();
  return Graph::from_edges(remaining, edges, std::move(labels));
}

}  // namespace epithresh
