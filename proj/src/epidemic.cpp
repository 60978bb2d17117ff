#include "epithresh/epidemic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "epithresh/invariants.hpp"

namespace epithresh {
namespace {

void require_edges(const Graph& g, const char* what) {
  if (g.order() < 2 || g.size() == 0) {
    throw GraphError(std::string(what) + " requires n >= 2 and at least one edge");
  }
}

}  // namespace

void EpidemicParams::validate() const {
  if (!(birth > 0.0 && birth < 1.0)) {
    throw std::invalid_argument("birth rate must lie in (0, 1), got " + std::to_string(birth));
  }
  if (!(death > 0.0 && death < 1.0)) {
    throw std::invalid_argument("death rate must lie in (0, 1), got " + std::to_string(death));
  }
}

double epidemic_threshold(const Graph& g, const EigenSettings& settings) {
  if (g.size() == 0) throw GraphError("threshold undefined (lambda_1 = 0 on an edgeless graph)");
  return 1.0 / largest_eigenvalue(g, settings).lambda1;
}

std::string_view to_string(Outcome o) {
  return o == Outcome::die_out ? "die_out" : "linger";
}

Outcome predict_outcome(double lambda1, const EpidemicParams& p) {
  p.validate();
  if (!(lambda1 > 0.0)) throw GraphError("threshold undefined (lambda_1 = 0 on an edgeless graph)");
  // birth/death <= 1/lambda1, rearranged to avoid two divisions.
  return p.birth * lambda1 <= p.death ? Outcome::die_out : Outcome::linger;
}

Outcome predict_outcome(const Graph& g, const EpidemicParams& p, const EigenSettings& settings) {
  if (g.size() == 0) throw GraphError("threshold undefined (lambda_1 = 0 on an edgeless graph)");
  return predict_outcome(largest_eigenvalue(g, settings).lambda1, p);
}

BoundsReport eigen_bounds(const Graph& g, const EigenSettings& settings,
                          std::chrono::milliseconds chromatic_budget) {
  require_edges(g, "eigenvalue bounds");
  const auto n = static_cast<double>(g.order());
  const auto stats = degree_stats(g);
  const bool regular = is_regular(g);
  const bool complete = is_complete(g);

  BoundsReport r;
  r.lambda1 = largest_eigenvalue(g, settings).lambda1;

  r.average_degree = {stats.average_degree, regular, true};
  r.sqrt_max_degree = {std::sqrt(static_cast<double>(stats.max_degree)), is_star(g), true};

  r.chromatic_number = chromatic_number(g, chromatic_budget);
  if (r.chromatic_number) {
    r.chromatic = {static_cast<double>(*r.chromatic_number) - 1.0, complete || is_odd_cycle(g),
                   true};
  } else {
    r.chromatic = {0.0, false, false};
  }

  const bool connected = is_connected(g);
  r.path = {2.0 * std::cos(std::numbers::pi / (n + 1.0)), connected && is_path(g), connected};

  r.max_degree = {static_cast<double>(stats.max_degree), regular, true};
  r.complete = {n - 1.0, complete, true};
  return r;
}

LingerReport lingering_conditions(const Graph& g, const EpidemicParams& p) {
  require_edges(g, "lingering conditions");
  const auto n = static_cast<double>(g.order());
  const auto m = static_cast<double>(g.size());
  const auto delta = static_cast<double>(degree_stats(g).max_degree);
  const auto omega = static_cast<double>(clique_number(g));

  LingerReport r;
  r.average_degree = n * p.death < 2.0 * m * p.birth;
  r.max_degree = p.death < p.birth * std::sqrt(delta);
  r.clique = p.death < p.birth * (omega - 1.0);
  return r;
}

}  // namespace epithresh
