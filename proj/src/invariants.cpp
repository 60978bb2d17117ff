#include "epithresh/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

namespace epithresh {
namespace {

/// Fixed-size bitset sized at runtime; just enough for clique search.
class VertexSet {
 public:
  explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_and(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return c;
  }
  VertexSet intersect(const VertexSet& other) const {
    VertexSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }
  VertexSet minus(const VertexSet& other) const {
    VertexSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
    return out;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) {
    const std::size_t n = g.order();
    adjacency_.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      VertexSet row(n);
      for (Vertex u : g.neighbors(v)) row.set(u);
      adjacency_.push_back(std::move(row));
    }
  }

  std::size_t run(std::size_t n) {
    VertexSet all(n);
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    expand(0, all);
    return best_;
  }

 private:
  void expand(std::size_t depth, VertexSet candidates) {
    const std::size_t remaining = candidates.count();
    if (remaining == 0) {
      best_ = std::max(best_, depth);
      return;
    }
    if (depth + remaining <= best_) return;

    std::size_t pivot = 0;
    std::size_t pivot_score = 0;
    bool have_pivot = false;
    candidates.for_each([&](std::size_t u) {
      const std::size_t score = candidates.count_and(adjacency_[u]);
      if (!have_pivot || score > pivot_score) {
        pivot = u;
        pivot_score = score;
        have_pivot = true;
      }
    });

    const VertexSet branch = candidates.minus(adjacency_[pivot]);
    branch.for_each([&](std::size_t v) {
      if (depth + candidates.count() <= best_) return;
      expand(depth + 1, candidates.intersect(adjacency_[v]));
      candidates.reset(v);
    });
  }

  std::vector<VertexSet> adjacency_;
  std::size_t best_ = 0;
};

class BudgetExceeded {};

/// Backtracking k-colorability with dynamic DSATUR vertex choice.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::size_t k,
                 std::chrono::steady_clock::time_point deadline, bool bounded)
      : g_(g), k_(k), deadline_(deadline), bounded_(bounded),
        color_(g.order(), kNone), neighbor_color_count_(g.order() * k, 0),
        saturation_(g.order(), 0) {}

  bool solve() { return extend(0, 0); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool extend(std::size_t colored, std::size_t colors_used) {
    if (colored == g_.order()) return true;
    if (bounded_ && (++nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExceeded{};
    }
    // Most saturated uncolored vertex; ties go to the higher degree, then lower id.
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] != kNone) continue;
      if (!found || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick))) {
        pick = v;
        found = true;
      }
    }
    if (saturation_[pick] >= k_) return false;

    // A fresh color is interchangeable with any other unused one, so only the
    // first unused color is tried.
    const std::size_t limit = std::min(k_, colors_used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (neighbor_color_count_[pick * k_ + c] != 0) continue;
      assign(pick, c);
      if (extend(colored + 1, std::max(colors_used, c + 1))) return true;
      unassign(pick, c);
    }
    return false;
  }

  void assign(Vertex v, std::size_t c) {
    color_[v] = c;
    for (Vertex u : g_.neighbors(v)) {
      if (neighbor_color_count_[u * k_ + c]++ == 0) ++saturation_[u];
    }
  }
  void unassign(Vertex v, std::size_t c) {
    color_[v] = kNone;
    for (Vertex u : g_.neighbors(v)) {
      if (--neighbor_color_count_[u * k_ + c] == 0) --saturation_[u];
    }
  }

  const Graph& g_;
  std::size_t k_;
  std::chrono::steady_clock::time_point deadline_;
  bool bounded_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> neighbor_color_count_;
  std::vector<std::size_t> saturation_;
  std::size_t nodes_ = 0;
};

}  // namespace

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    stats.degrees.push_back(g.degree(v));
    stats.max_degree = std::max(stats.max_degree, g.degree(v));
  }
  if (!g.empty()) {
    stats.average_degree = 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
  }
  return stats;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        frontier.push(u);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> component(g.order(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (component[root] != kUnset) continue;
    component[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (component[u] == kUnset) {
          component[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return component;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::size_t clique_number(const Graph& g) {
  if (g.empty()) return 0;
  MaxCliqueSearch search(g);
  return search.run(g.order());
}

std::vector<std::size_t> dsatur_coloring(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(n, kNone);
  std::vector<std::vector<bool>> seen(n);
  std::vector<std::size_t> saturation(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != kNone) continue;
      if (!found || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick))) {
        pick = v;
        found = true;
      }
    }
    std::size_t c = 0;
    while (c < seen[pick].size() && seen[pick][c]) ++c;
    color[pick] = c;
    for (Vertex u : g.neighbors(pick)) {
      if (seen[u].size() <= c) seen[u].resize(c + 1, false);
      if (!seen[u][c]) {
        seen[u][c] = true;
        ++saturation[u];
      }
    }
  }
  return color;
}

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.order()) return false;
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

std::optional<std::size_t> chromatic_number(const Graph& g, std::chrono::milliseconds budget) {
  if (g.empty()) return 0;
  if (g.size() == 0) return 1;
  const auto greedy = dsatur_coloring(g);
  const std::size_t upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  const bool bounded = budget != std::chrono::milliseconds::max();
  const auto deadline = bounded ? std::chrono::steady_clock::now() + budget
                                : std::chrono::steady_clock::time_point::max();
  try {
    for (std::size_t k = std::max<std::size_t>(clique_number(g), 2); k < upper; ++k) {
      ColoringSearch search(g, k, deadline, bounded);
      if (search.solve()) return k;
    }
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  return upper;
}

bool is_regular(const Graph& g) {
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_path(const Graph& g) {
  if (g.empty() || g.size() + 1 != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() + 1 != n) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_odd_cycle(const Graph& g) { return is_cycle(g) && g.order() % 2 == 1; }

}  // namespace epithresh
