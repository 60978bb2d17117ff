#include "epithresh/sis.hpp"

#include <numeric>
#include <stdexcept>

#include "epithresh/parallel.hpp"

namespace epithresh {

void SimulationConfig::validate(const Graph& g) const {
  params.validate();
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (days < 1) throw std::invalid_argument("days must be >= 1");
  if (g.empty()) throw std::invalid_argument("cannot simulate on the empty graph");
  if (seed_vertices) {
    if (seed_vertices->empty()) throw std::invalid_argument("seed vertex list is empty");
    for (Vertex v : *seed_vertices) {
      if (v >= g.order()) throw std::invalid_argument("seed vertex " + std::to_string(v) + " out of range");
    }
  }
}

EpidemicCurve simulate(const Graph& g, const SimulationConfig& cfg) {
  cfg.validate(g);

  EpidemicCurve curve;
  curve.config = cfg;
  if (cfg.seed_vertices) {
    curve.seeds = *cfg.seed_vertices;
  } else {
    curve.seeds.resize(g.order());
    std::iota(curve.seeds.begin(), curve.seeds.end(), Vertex{0});
  }

  const std::size_t seeds = curve.seeds.size();
  std::vector<std::vector<std::uint64_t>> totals(seeds, std::vector<std::uint64_t>(cfg.days, 0));
  parallel_for(seeds, cfg.threads, [&](std::size_t i) {
    const Vertex seed = curve.seeds[i];
    for (std::size_t k = 0; k < cfg.repetitions; ++k) {
      UniformDraws draws(derive_stream_seed(cfg.master_seed, seed, k));
      const auto series = run_single(g, seed, cfg.params, cfg.days, draws);
      for (std::size_t t = 0; t < cfg.days; ++t) totals[i][t] += series[t];
    }
  });

  const auto runs = static_cast<double>(seeds * cfg.repetitions);
  curve.mean_infected.assign(cfg.days, 0.0);
  for (std::size_t t = 0; t < cfg.days; ++t) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < seeds; ++i) sum += totals[i][t];
    curve.mean_infected[t] = static_cast<double>(sum) / runs;
  }
  if (cfg.record_per_seed) {
    const auto reps = static_cast<double>(cfg.repetitions);
    curve.per_seed.reserve(seeds);
    for (std::size_t i = 0; i < seeds; ++i) {
      std::vector<double> row(cfg.days);
      for (std::size_t t = 0; t < cfg.days; ++t) row[t] = static_cast<double>(totals[i][t]) / reps;
      curve.per_seed.push_back(std::move(row));
    }
  }
  return curve;
}

}  // namespace epithresh
