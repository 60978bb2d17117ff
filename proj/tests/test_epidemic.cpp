#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "epithresh/epidemic.hpp"
#include "epithresh/named_graphs.hpp"
#include "oracles.hpp"

using namespace epithresh;

TEST_CASE("threshold values") {
  CHECK(epidemic_threshold(karate_graph()) == doctest::Approx(1 / 6.725697727631729));
  CHECK(epidemic_threshold(house_graph()) == doctest::Approx(1 / 2.481194304092016));
  for (int n = 2; n < 10; ++n) CHECK(epidemic_threshold(complete_graph(n)) == doctest::Approx(1.0 / (n - 1)));
  CHECK_THROWS_AS(epidemic_threshold(Graph::from_edges(3, {})), GraphError);
}

TEST_CASE("outcome prediction") {
  const Graph k = karate_graph();
  CHECK(predict_outcome(k, {0.05, 0.4}) == Outcome::die_out);
  CHECK(predict_outcome(k, {0.05, 0.2}) == Outcome::linger);
  CHECK(predict_outcome(k, {0.05, 0.1}) == Outcome::linger);
  // Exactly at the threshold: 0.1 * 2 == 0.2.
  CHECK(predict_outcome(2.0, {0.1, 0.2}) == Outcome::die_out);
  CHECK(predict_outcome(2.0, {0.1, 0.19}) == Outcome::linger);
  CHECK_THROWS_AS(predict_outcome(k, {0.0, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(predict_outcome(k, {0.05, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(predict_outcome(Graph::from_edges(2, {}), {0.05, 0.4}), GraphError);
  CHECK(to_string(Outcome::linger) == "linger");
}

TEST_CASE("bounds on family examples") {
  const auto p = eigen_bounds(path_graph(6));
  CHECK(p.path.value == doctest::Approx(2 * std::cos(std::numbers::pi / 7)));
  CHECK(p.path.equality);
  CHECK(p.lambda1 == doctest::Approx(p.path.value).epsilon(1e-9));

  const auto s = eigen_bounds(star_graph(9));
  CHECK(s.sqrt_max_degree.value == doctest::Approx(std::sqrt(8.0)));
  CHECK(s.sqrt_max_degree.equality);
  CHECK(s.lambda1 == doctest::Approx(std::sqrt(8.0)).epsilon(1e-9));

  const auto c = eigen_bounds(cycle_graph(7));
  CHECK(c.chromatic.value == 2.0);
  CHECK(c.chromatic.equality);
  CHECK(c.average_degree.equality);
  CHECK(c.max_degree.equality);
  CHECK_FALSE(c.complete.equality);

  const auto kn = eigen_bounds(complete_graph(6));
  CHECK(kn.complete.equality);
  CHECK(kn.chromatic.equality);
  CHECK(kn.chromatic_number == 6u);

  const auto h = eigen_bounds(house_graph());
  CHECK_FALSE(h.average_degree.equality);
  CHECK_FALSE(h.sqrt_max_degree.equality);
  CHECK_FALSE(h.chromatic.equality);
  CHECK_FALSE(h.path.equality);
  CHECK_FALSE(h.max_degree.equality);
  CHECK_FALSE(h.complete.equality);
}

TEST_CASE("bounds preconditions and disconnected input") {
  CHECK_THROWS_AS(eigen_bounds(Graph::from_edges(3, {})), GraphError);
  CHECK_THROWS_AS(eigen_bounds(Graph::from_edges(1, {})), GraphError);
  const std::vector<Edge> e{{0, 1}};
  const auto r = eigen_bounds(Graph::from_edges(5, e));
  CHECK_FALSE(r.path.applicable);
  CHECK(r.lambda1 == doctest::Approx(1.0));
}

TEST_CASE("bound sandwich on random graphs") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected_graph(2 + trial % 20, 0.1 + (trial % 6) * 0.15, rng);
    const auto r = eigen_bounds(g);
    constexpr double slack = 1e-9;
    CHECK(r.average_degree.value <= r.lambda1 + slack);
    CHECK(r.sqrt_max_degree.value <= r.lambda1 + slack);
    REQUIRE(r.chromatic.applicable);
    CHECK(r.chromatic.value <= r.lambda1 + slack);
    CHECK(r.path.value <= r.lambda1 + slack);
    CHECK(r.lambda1 <= r.max_degree.value + slack);
    CHECK(r.lambda1 <= r.complete.value + slack);
  }
}

TEST_CASE("lingering conditions") {
  const auto k = lingering_conditions(karate_graph(), {0.05, 0.2});
  CHECK(k.average_degree);  // 6.8 < 7.8
  CHECK(k.any());
  const auto kn = lingering_conditions(complete_graph(10), {0.05, 0.4});
  CHECK(kn.clique);  // 0.4 < 0.45
  // p_d >= p_b * Delta switches all three off.
  const Graph g = karate_graph();
  const auto off = lingering_conditions(g, {0.05, 0.05 * 17});
  CHECK_FALSE(off.any());
  CHECK_THROWS_AS(lingering_conditions(Graph::from_edges(3, {}), {0.05, 0.4}), GraphError);
}

TEST_CASE("any lingering condition implies a linger prediction") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> rate(0.001, 0.999);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected_graph(2 + trial, 0.2, rng);
    const double l1 = largest_eigenvalue(g).lambda1;
    for (int i = 0; i < 50; ++i) {
      const EpidemicParams p{rate(rng), rate(rng)};
      if (lingering_conditions(g, p).any()) CHECK(predict_outcome(l1, p) == Outcome::linger);
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW((EpidemicParams{0.05, 0.4}.validate()));
  CHECK_THROWS_AS((EpidemicParams{1.0, 0.4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((EpidemicParams{0.05, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((EpidemicParams{std::nan(""), 0.4}.validate()), std::invalid_argument);
}
