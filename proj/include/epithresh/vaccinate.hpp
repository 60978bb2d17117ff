#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epithresh/graph.hpp"
#include "epithresh/measure.hpp"
#include "epithresh/spectral.hpp"

namespace epithresh {

enum class VaccinationMethod { batch, greedy };

std::string_view to_string(VaccinationMethod m);
/// Accepts "batch"/"method1" and "greedy"/"method2".
VaccinationMethod parse_vaccination_method(std::string_view name);

/// How a choice among tied vertices is made. `random` draws uniformly with the
/// report's tie seed; `lowest_id` takes the smallest vertex ids, the result an
/// argmax that returns the first maximum would give.
enum class TieBreak { random, lowest_id };

std::string_view to_string(TieBreak t);
/// Accepts "random" and "lowest".
TieBreak parse_tie_break(std::string_view name);

struct VaccinationReport {
  VaccinationMethod method = VaccinationMethod::batch;
  Measure measure = Measure::spread;
  std::vector<Vertex> removed;  // ids in the input graph, in removal order
  std::vector<std::string> removed_labels;
  /// lambda_1 after 0, 1, ..., k removals.
  std::vector<double> lambda1_trajectory;
  std::uint64_t tie_seed = 0;
  TieBreak tie_break = TieBreak::random;

  double final_lambda1() const { return lambda1_trajectory.back(); }
};

/// Scores used to pick vertices for removal. Identical to
/// compute_centrality() on connected graphs; on disconnected graphs closeness
/// is taken within each component (isolated vertices score 0) and the
/// eigenvector score is the global dominant eigenvector.
std::vector<double> removal_scores(Measure m, const Graph& g, const EigenSettings& settings,
                                   std::size_t threads = 0);

/// Scores G once and removes the k best vertices together. When the k-th
/// value is tied with vertices below the cut, the open slots are filled by
/// uniform sampling from that tie group only. The trajectory removes the
/// chosen set one prefix at a time in descending score order. 1 <= k < n.
VaccinationReport vaccinate_batch(const Graph& g, Measure f, std::size_t k,
                                  std::uint64_t tie_seed, const EigenSettings& settings = {},
                                  std::size_t threads = 0, TieBreak ties = TieBreak::random);

/// k rounds of: rescore the current graph, remove one top-scoring vertex
/// (uniform among ties). 1 <= k < n.
VaccinationReport vaccinate_greedy(const Graph& g, Measure f, std::size_t k,
                                   std::uint64_t tie_seed, const EigenSettings& settings = {},
                                   std::size_t threads = 0, TieBreak ties = TieBreak::random);

VaccinationReport vaccinate(VaccinationMethod method, const Graph& g, Measure f, std::size_t k,
                            std::uint64_t tie_seed, const EigenSettings& settings = {},
                            std::size_t threads = 0, TieBreak ties = TieBreak::random);

struct MethodSummary {
  std::vector<double> finals;  // final lambda_1 per trial
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single trial
  double min = 0.0;
  double max = 0.0;
};

struct MethodComparison {
  std::vector<std::uint64_t> tie_seeds;  // derive_stream_seed(master_seed, trial, 0)
  MethodSummary batch;
  MethodSummary greedy;
};

/// Both methods once per trial with the same derived tie seed.
MethodComparison compare_methods(const Graph& g, Measure f, std::size_t k, std::size_t trials,
                                 std::uint64_t master_seed, const EigenSettings& settings = {},
                                 std::size_t threads = 0);

}  // namespace epithresh
