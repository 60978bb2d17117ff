#pragma once

#include <chrono>
#include <optional>
#include <string_view>

#include "epithresh/graph.hpp"
#include "epithresh/spectral.hpp"

namespace epithresh {

/// SIS rates per day: `birth` is the per-infected-neighbor infection
/// probability, `death` the recovery probability of an infected vertex.
struct EpidemicParams {
  double birth = 0.05;
  double death = 0.4;

  /// Throws std::invalid_argument unless both lie in the open interval (0, 1).
  void validate() const;
};

/// tau(G) = 1 / lambda_1(G). Throws GraphError on an edgeless graph.
double epidemic_threshold(const Graph& g, const EigenSettings& settings = {});

enum class Outcome { die_out, linger };

std::string_view to_string(Outcome o);

/// Threshold prediction of the nonlinear dynamical system model: die-out iff
/// birth / death <= tau(G). The boundary counts as die-out.
Outcome predict_outcome(double lambda1, const EpidemicParams& p);
Outcome predict_outcome(const Graph& g, const EpidemicParams& p,
                        const EigenSettings& settings = {});

/// One eigenvalue bound. `equality` is the structural characterization of
/// the tight case; `applicable` is false when the bound's hypothesis fails
/// (the path bound needs a connected graph) or its value is unknown (the
/// chromatic bound after its time budget ran out). The equality
/// characterizations are those for connected graphs.
struct EigenBound {
  double value = 0.0;
  bool equality = false;
  bool applicable = true;
};

struct BoundsReport {
  double lambda1 = 0.0;
  // lower bounds
  EigenBound average_degree;   // 2m/n, tight iff regular
  EigenBound sqrt_max_degree;  // sqrt(Delta), tight iff star
  EigenBound chromatic;        // chi - 1, tight iff complete or odd cycle
  EigenBound path;             // 2 cos(pi/(n+1)), tight iff path; connected only
  // upper bounds
  EigenBound max_degree;  // Delta, tight iff regular
  EigenBound complete;    // n - 1, tight iff complete
  std::optional<std::size_t> chromatic_number;
};

/// Requires n >= 2 and m >= 1; throws GraphError otherwise.
BoundsReport eigen_bounds(
    const Graph& g, const EigenSettings& settings = {},
    std::chrono::milliseconds chromatic_budget = std::chrono::milliseconds(10'000));

/// Sufficient conditions for the epidemic to linger, each a strict inequality
/// on exact graph invariants.
struct LingerReport {
  bool average_degree = false;   // n * death < 2m * birth
  bool max_degree = false;       // death < birth * sqrt(Delta)
  bool clique = false;           // death < birth * (omega - 1)

  bool any() const noexcept { return average_degree || max_degree || clique; }
};

/// Requires n >= 2 and m >= 1; throws GraphError otherwise.
LingerReport lingering_conditions(const Graph& g, const EpidemicParams& p);

}  // namespace epithresh
