#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "epithresh/graph.hpp"

namespace epithresh {

class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : GraphError(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based source line, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ParsedGraph {
  Graph graph;
  DropCounts dropped;
};

enum class GraphFormat { edge_list, gml };

/// Whitespace-separated vertex pairs, one per line. Lines starting with '#'
/// or '%' are comments. Vertices are numbered in order of first appearance
/// and keep their tokens as labels.
ParsedGraph parse_edge_list(std::string_view text);

/// The `graph [ node [ id .. label .. ] edge [ source .. target .. ] ]`
/// subset of GML. Unknown keys are skipped. Labels come from `label` when a
/// node has one, otherwise from its id.
ParsedGraph parse_gml(std::string_view text);

/// Serializes as an edge list using vertex labels. Isolated vertices cannot be
/// expressed in this format and are listed in a trailing comment.
std::string to_edge_list(const Graph& g);

ParsedGraph read_graph_file(const std::filesystem::path& path, GraphFormat format);

GraphFormat parse_graph_format(std::string_view name);

}  // namespace epithresh
