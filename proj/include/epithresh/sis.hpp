#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "epithresh/epidemic.hpp"
#include "epithresh/graph.hpp"
#include "epithresh/random.hpp"

namespace epithresh {

inline constexpr std::uint8_t kSusceptible = 0;
inline constexpr std::uint8_t kInfected = 1;

/// Per-vertex state on one day.
using StateVector = std::vector<std::uint8_t>;

/// Anything producing uniform doubles in [0, 1) on each call.
template <typename D>
concept DrawSource = requires(D& d) {
  { d() } -> std::convertible_to<double>;
};

/// One synchronous day of SIS dynamics, reading only `prev`.
///
/// Vertices are visited in ascending id. A susceptible vertex with i infected
/// neighbors makes up to i draws and becomes infected at the first draw below
/// `birth`. An infected vertex makes one draw and recovers if it is below
/// `death`. Rates are not range-checked here, so tests can force outcomes
/// with rates of 0 or 1.
template <DrawSource Draw>
void step(const Graph& g, const StateVector& prev, StateVector& next, const EpidemicParams& p,
          Draw& draw) {
  const std::size_t n = g.order();
  next.resize(n);
  for (Vertex w = 0; w < n; ++w) {
    if (prev[w] == kSusceptible) {
      std::size_t infected_neighbors = 0;
      for (Vertex x : g.neighbors(w)) infected_neighbors += prev[x];
      std::uint8_t state = kSusceptible;
      for (std::size_t j = 0; j < infected_neighbors; ++j) {
        if (draw() < p.birth) {
          state = kInfected;
          break;
        }
      }
      next[w] = state;
    } else {
      next[w] = draw() < p.death ? kSusceptible : kInfected;
    }
  }
}

template <DrawSource Draw>
StateVector step(const Graph& g, const StateVector& prev, const EpidemicParams& p, Draw& draw) {
  StateVector next;
  step(g, prev, next, p, draw);
  return next;
}

/// Infected counts for days 1..days (element t-1 is day t). Day 1 has only
/// `seed` infected. Extinction is absorbing, so once the count hits zero the
/// remaining days are filled with zeros without consuming draws.
template <DrawSource Draw>
std::vector<std::uint32_t> run_single(const Graph& g, Vertex seed, const EpidemicParams& p,
                                      std::size_t days, Draw& draw) {
  if (seed >= g.order()) throw GraphError("seed vertex out of range");
  std::vector<std::uint32_t> series(days, 0);
  if (days == 0) return series;
  StateVector current(g.order(), kSusceptible);
  StateVector next;
  current[seed] = kInfected;
  series[0] = 1;
  for (std::size_t t = 1; t < days; ++t) {
    step(g, current, next, p, draw);
    current.swap(next);
    std::uint32_t count = 0;
    for (auto s : current) count += s;
    series[t] = count;
    if (count == 0) break;
  }
  return series;
}

struct SimulationConfig {
  EpidemicParams params;
  std::size_t repetitions = 200;  // runs per seed vertex
  std::size_t days = 100;
  std::uint64_t master_seed = 1;
  /// nullopt: every vertex seeds in turn.
  std::optional<std::vector<Vertex>> seed_vertices;
  bool record_per_seed = false;
  std::size_t threads = 0;  // 0 = default_thread_count()

  /// Throws std::invalid_argument on invalid rates, zero repetitions or days,
  /// or a seed vertex outside g.
  void validate(const Graph& g) const;
};

struct EpidemicCurve {
  /// Mean infected count per day over all (seed, repetition) runs.
  std::vector<double> mean_infected;
  std::vector<Vertex> seeds;
  /// Per-seed means, seeds.size() rows of `days` values; empty unless
  /// record_per_seed.
  std::vector<std::vector<double>> per_seed;
  SimulationConfig config;
};

/// Runs every (seed v, repetition k) pair with a private stream seeded by
/// derive_stream_seed(master_seed, v, k). Counts are summed as integers, so
/// the curve is bit-identical for any thread count.
EpidemicCurve simulate(const Graph& g, const SimulationConfig& cfg);

}  // namespace epithresh
