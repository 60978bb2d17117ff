#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "epithresh/named_graphs.hpp"
#include "epithresh/spectral.hpp"
#include "oracles.hpp"

using namespace epithresh;

TEST_CASE("lambda1 of fixtures") {
  CHECK(largest_eigenvalue(karate_graph()).lambda1 == doctest::Approx(6.7257).epsilon(1e-4));
  CHECK(largest_eigenvalue(house_graph()).lambda1 == doctest::Approx(2.4812).epsilon(1e-4));
}

TEST_CASE("lambda1 closed forms on families") {
  for (int n = 2; n <= 30; ++n) {
    CHECK(largest_eigenvalue(complete_graph(n)).lambda1 == doctest::Approx(n - 1.0).epsilon(1e-9));
    CHECK(largest_eigenvalue(path_graph(n)).lambda1 ==
          doctest::Approx(2 * std::cos(std::numbers::pi / (n + 1))).epsilon(1e-9));
    CHECK(largest_eigenvalue(star_graph(n)).lambda1 == doctest::Approx(std::sqrt(n - 1.0)).epsilon(1e-9));
    if (n >= 3) CHECK(largest_eigenvalue(cycle_graph(n)).lambda1 == doctest::Approx(2.0).epsilon(1e-9));
  }
  // Bipartite: the -lambda_1 eigenvalue must not stall the iteration.
  CHECK(largest_eigenvalue(complete_bipartite_graph(3, 12)).lambda1 == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("agrees with the dense solver on random graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_connected_graph(2 + trial % 40, 0.05 + (trial % 7) * 0.1, rng);
    const auto r = largest_eigenvalue(g);
    CHECK(r.lambda1 == doctest::Approx(oracle::dense_lambda1(g)).epsilon(1e-9));
    CHECK(r.residual <= 1e-10);
  }
}

TEST_CASE("disconnected graph gives the largest component value") {
  const std::vector<Edge> e{{0, 1}, {2, 3}, {3, 4}, {2, 4}, {4, 5}};
  const Graph g = Graph::from_edges(7, e);
  CHECK(largest_eigenvalue(g).lambda1 == doctest::Approx(oracle::dense_lambda1(g)).epsilon(1e-9));
}

TEST_CASE("edgeless and empty graphs") {
  const auto r = largest_eigenvalue(Graph::from_edges(4, {}));
  CHECK(r.lambda1 == 0.0);
  CHECK(r.iterations == 0);
  CHECK_THROWS(largest_eigenvalue(Graph{}));
}

TEST_CASE("eigenvector is a positive unit vector matching the dense solver") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected_graph(3 + trial, 0.2, rng);
    const auto cv = principal_eigenvector(g);
    const auto ref = oracle::dense_perron_vector(g);
    double norm = 0;
    for (std::size_t i = 0; i < cv.values.size(); ++i) {
      CHECK(cv.values[i] > 0);
      CHECK(cv.values[i] == doctest::Approx(ref[i]).epsilon(1e-7));
      norm += cv.values[i] * cv.values[i];
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cv.graph_digest == g.digest());
    CHECK(cv.measure == Measure::eigenvector);
  }
  CHECK_THROWS_AS(principal_eigenvector(Graph::from_edges(3, {})), GraphError);
}

TEST_CASE("house eigenvector") {
  const auto v = principal_eigenvector(house_graph()).values;
  const double expected[] = {0.3578, 0.3578, 0.5299, 0.4271, 0.5299};
  for (int i = 0; i < 5; ++i) CHECK(v[i] == doctest::Approx(expected[i]).epsilon(1e-3));
}

TEST_CASE("iteration cap raises ConvergenceError") {
  EigenSettings s;
  s.max_iterations = 2;
  s.tolerance = 1e-14;
  try {
    largest_eigenvalue(karate_graph(), s);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations() == 2);
    CHECK(e.residual() > 1e-14);
    CHECK(e.estimate() > 0);
  }
}

TEST_CASE("settings validation") {
  EigenSettings s;
  s.tolerance = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.max_iterations = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.shift = -1;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}
