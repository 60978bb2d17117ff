#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace epithresh {

enum class Measure { spread, degree, closeness, betweenness, eigenvector };

inline constexpr std::array<Measure, 5> kAllMeasures = {
    Measure::spread, Measure::degree, Measure::closeness, Measure::betweenness,
    Measure::eigenvector};

std::string_view to_string(Measure m);
/// Throws std::invalid_argument on an unknown name.
Measure parse_measure(std::string_view name);

/// One score per vertex for a named measure.
struct CentralityVector {
  Measure measure = Measure::degree;
  std::vector<double> values;
  std::uint64_t graph_digest = 0;  // Graph::digest() of the analyzed graph
};

}  // namespace epithresh
