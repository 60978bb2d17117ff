#include "epithresh/spectral.hpp"

#include <cmath>
#include <sstream>

#include "epithresh/invariants.hpp"

namespace epithresh {

void EigenSettings::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("eigen tolerance must be > 0");
  if (max_iterations < 1) throw std::invalid_argument("eigen max_iterations must be >= 1");
  if (!(shift >= 0.0)) throw std::invalid_argument("eigen shift must be >= 0");
}

SpectralResult largest_eigenvalue(const Graph& g, const EigenSettings& settings) {
  settings.validate();
  const std::size_t n = g.order();
  if (n == 0) throw GraphError("largest eigenvalue of the empty graph is undefined");

  SpectralResult result;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  if (g.size() == 0) {
    result.eigenvector = std::move(x);
    return result;
  }

  std::vector<double> y(n);
  double estimate = 0.0;
  double residual = 0.0;
  for (std::size_t iter = 1; iter <= settings.max_iterations; ++iter) {
    for (Vertex v = 0; v < n; ++v) {
      double sum = settings.shift * x[v];
      for (Vertex u : g.neighbors(v)) sum += x[u];
      y[v] = sum;
    }
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < n; ++i) rayleigh += x[i] * y[i];
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - rayleigh * x[i]));
    estimate = rayleigh - settings.shift;
    if (residual <= settings.tolerance) {
      result.lambda1 = estimate;
      result.eigenvector = std::move(x);
      result.iterations = iter;
      result.residual = residual;
      return result;
    }
    double norm = 0.0;
    for (double value : y) norm += value * value;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }

  std::ostringstream msg;
  msg << "power iteration did not converge in " << settings.max_iterations
      << " iterations (estimate " << estimate << ", residual " << residual << ")";
  throw ConvergenceError(msg.str(), estimate, residual, settings.max_iterations);
}

CentralityVector principal_eigenvector(const Graph& g, const EigenSettings& settings) {
  if (!is_connected(g)) {
    throw GraphError("eigenvector centrality requires a connected graph");
  }
  CentralityVector cv;
  cv.measure = Measure::eigenvector;
  cv.values = largest_eigenvalue(g, settings).eigenvector;
  cv.graph_digest = g.digest();
  return cv;
}

}  // namespace epithresh
