#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "epithresh/graph.hpp"
#include "epithresh/measure.hpp"

namespace epithresh {

struct EigenSettings {
  double tolerance = 1e-10;  // on the infinity-norm eigen-residual
  std::size_t max_iterations = 100'000;
  double shift = 1.0;

  /// Throws std::invalid_argument unless tolerance > 0, max_iterations >= 1
  /// and shift >= 0.
  void validate() const;
};

struct SpectralResult {
  double lambda1 = 0.0;
  std::vector<double> eigenvector;  // unit L2 norm, entrywise >= 0
  std::size_t iterations = 0;
  double residual = 0.0;  // ||Ax - lambda1 x||_inf at termination
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double residual,
                   std::size_t iterations)
      : std::runtime_error(what), estimate_(estimate), residual_(residual),
        iterations_(iterations) {}

  double estimate() const noexcept { return estimate_; }
  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double estimate_;
  double residual_;
  std::size_t iterations_;
};

/// Largest adjacency eigenvalue and its eigenvector by power iteration on
/// A + shift*I, starting from the uniform unit vector.
///
/// Since lambda_n >= -lambda_1, a positive shift makes lambda_1 + shift the
/// strictly dominant eigenvalue in magnitude even for bipartite graphs. The
/// operator is entrywise nonnegative, so iterates never change sign. For a
/// disconnected graph the result is the maximum over components. Edgeless
/// graphs return exactly 0 without iterating.
///
/// Throws ConvergenceError if the residual does not reach the tolerance.
SpectralResult largest_eigenvalue(const Graph& g, const EigenSettings& settings = {});

/// Eigenvector centrality: the Perron vector of a connected graph, unit L2
/// norm, every entry positive. Throws GraphError for disconnected input.
CentralityVector principal_eigenvector(const Graph& g, const EigenSettings& settings = {});

}  // namespace epithresh
