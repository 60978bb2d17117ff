#include "epithresh/vaccinate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "epithresh/centrality.hpp"
#include "epithresh/invariants.hpp"
#include "epithresh/parallel.hpp"
#include "epithresh/random.hpp"

namespace epithresh {
namespace {

void check_k(const Graph& g, std::size_t k) {
  if (k < 1 || k >= g.order()) {
    throw std::invalid_argument("vaccination needs 1 <= k < n (k = " + std::to_string(k) +
                                ", n = " + std::to_string(g.order()) + ")");
  }
}

std::vector<double> component_closeness(const Graph& g) {
  std::vector<double> out(g.order(), 0.0);
  for (Vertex v = 0; v < g.order(); ++v) {
    long total = 0;
    for (int d : bfs_distances(g, v)) {
      if (d > 0) total += d;
    }
    out[v] = total > 0 ? 1.0 / static_cast<double>(total) : 0.0;
  }
  return out;
}

std::vector<Vertex> lowest_ids(std::vector<Vertex> group, std::size_t count) {
  std::sort(group.begin(), group.end());
  group.resize(count);
  return group;
}

MethodSummary summarize(std::vector<double> finals) {
  MethodSummary s;
  s.finals = std::move(finals);
  const auto n = static_cast<double>(s.finals.size());
  s.mean = std::accumulate(s.finals.begin(), s.finals.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : s.finals) ss += (x - s.mean) * (x - s.mean);
  s.stddev = s.finals.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  const auto [lo, hi] = std::minmax_element(s.finals.begin(), s.finals.end());
  s.min = *lo;
  s.max = *hi;
  // Rounding in the sum can push the mean of near-equal values past an end.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

}  // namespace

std::string_view to_string(VaccinationMethod m) {
  return m == VaccinationMethod::batch ? "batch" : "greedy";
}

std::string_view to_string(TieBreak t) {
  return t == TieBreak::random ? "random" : "lowest";
}

TieBreak parse_tie_break(std::string_view name) {
  if (name == "random") return TieBreak::random;
  if (name == "lowest") return TieBreak::lowest_id;
  throw std::invalid_argument("unknown tie-break '" + std::string(name) + "' (expected random or lowest)");
}

VaccinationMethod parse_vaccination_method(std::string_view name) {
  if (name == "batch" || name == "method1" || name == "1") return VaccinationMethod::batch;
  if (name == "greedy" || name == "method2" || name == "2") return VaccinationMethod::greedy;
  throw std::invalid_argument("unknown vaccination method '" + std::string(name) +
                              "' (expected batch|method1 or greedy|method2)");
}

std::vector<double> removal_scores(Measure m, const Graph& g, const EigenSettings& settings,
                                   std::size_t threads) {
  switch (m) {
    case Measure::closeness:
      return component_closeness(g);
    case Measure::eigenvector:
      return largest_eigenvalue(g, settings).eigenvector;
    default:
      return compute_centrality(m, g, settings, threads).values;
  }
}

VaccinationReport vaccinate_batch(const Graph& g, Measure f, std::size_t k,
                                  std::uint64_t tie_seed, const EigenSettings& settings,
                                  std::size_t threads, TieBreak ties) {
  check_k(g, k);
  CentralityVector scores{f, removal_scores(f, g, settings, threads), g.digest()};
  const Ranking ranking = rank(scores);

  UniformDraws draws(tie_seed);
  std::vector<Vertex> chosen;
  chosen.reserve(k);
  for (const auto& group : ranking.tie_groups) {
    const std::size_t open = k - chosen.size();
    if (open == 0) break;
    if (group.size() <= open) {
      chosen.insert(chosen.end(), group.begin(), group.end());
      continue;
    }
    if (ties == TieBreak::lowest_id) {
      const auto lowest = lowest_ids(group, open);
      chosen.insert(chosen.end(), lowest.begin(), lowest.end());
      break;
    }
    // Boundary group: partial Fisher-Yates draw of `open` members.
    std::vector<Vertex> pool = group;
    for (std::size_t i = 0; i < open; ++i) {
      const std::size_t j = i + draws.index(pool.size() - i);
      std::swap(pool[i], pool[j]);
      chosen.push_back(pool[i]);
    }
  }

  VaccinationReport report;
  report.method = VaccinationMethod::batch;
  report.measure = f;
  report.tie_seed = tie_seed;
  report.tie_break = ties;
  report.removed = chosen;
  for (Vertex v : chosen) report.removed_labels.push_back(g.label(v));
  report.lambda1_trajectory.resize(k + 1);
  report.lambda1_trajectory[0] = largest_eigenvalue(g, settings).lambda1;
  parallel_for(k, threads, [&](std::size_t i) {
    const std::span<const Vertex> prefix(chosen.data(), i + 1);
    report.lambda1_trajectory[i + 1] = largest_eigenvalue(delete_vertices(g, prefix), settings).lambda1;
  });
  return report;
}

VaccinationReport vaccinate_greedy(const Graph& g, Measure f, std::size_t k,
                                   std::uint64_t tie_seed, const EigenSettings& settings,
                                   std::size_t threads, TieBreak ties) {
  check_k(g, k);
  VaccinationReport report;
  report.method = VaccinationMethod::greedy;
  report.measure = f;
  report.tie_seed = tie_seed;
  report.tie_break = ties;
  report.lambda1_trajectory.push_back(largest_eigenvalue(g, settings).lambda1);

  UniformDraws draws(tie_seed);
  Graph current = g;
  std::vector<Vertex> original(g.order());
  std::iota(original.begin(), original.end(), Vertex{0});
  for (std::size_t round = 0; round < k; ++round) {
    CentralityVector scores{f, removal_scores(f, current, settings, threads), current.digest()};
    const Ranking ranking = rank(scores);
    const auto& top = ranking.tie_groups.front();
    // Deletion keeps relative order, so the lowest current id is also the
    // lowest original id.
    Vertex pick = top.front();
    if (top.size() > 1) {
      pick = ties == TieBreak::lowest_id ? *std::min_element(top.begin(), top.end())
                                         : top[draws.index(top.size())];
    }

    report.removed.push_back(original[pick]);
    report.removed_labels.push_back(current.label(pick));
    original.erase(original.begin() + pick);
    current = delete_vertex(current, pick);
    report.lambda1_trajectory.push_back(largest_eigenvalue(current, settings).lambda1);
  }
  return report;
}

VaccinationReport vaccinate(VaccinationMethod method, const Graph& g, Measure f, std::size_t k,
                            std::uint64_t tie_seed, const EigenSettings& settings,
                            std::size_t threads, TieBreak ties) {
  return method == VaccinationMethod::batch
             ? vaccinate_batch(g, f, k, tie_seed, settings, threads, ties)
             : vaccinate_greedy(g, f, k, tie_seed, settings, threads, ties);
}

MethodComparison compare_methods(const Graph& g, Measure f, std::size_t k, std::size_t trials,
                                 std::uint64_t master_seed, const EigenSettings& settings,
                                 std::size_t threads) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  check_k(g, k);
  MethodComparison out;
  for (std::size_t t = 0; t < trials; ++t) {
    out.tie_seeds.push_back(derive_stream_seed(master_seed, t, 0));
  }
  std::vector<double> batch(trials);
  std::vector<double> greedy(trials);
  // Parallel over trials; each trial runs its own scoring single-threaded.
  parallel_for(trials, threads, [&](std::size_t t) {
    batch[t] = vaccinate_batch(g, f, k, out.tie_seeds[t], settings, 1).final_lambda1();
    greedy[t] = vaccinate_greedy(g, f, k, out.tie_seeds[t], settings, 1).final_lambda1();
  });
  out.batch = summarize(std::move(batch));
  out.greedy = summarize(std::move(greedy));
  return out;
}

}  // namespace epithresh
