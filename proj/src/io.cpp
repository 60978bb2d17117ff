#include "epithresh/io.hpp"

#include <cctype>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace epithresh {
namespace {

/// Assigns dense ids to string tokens in first-appearance order.
class LabelInterner {
 public:
  Vertex intern(std::string_view token) {
    auto [it, inserted] = ids_.try_emplace(std::string(token), static_cast<Vertex>(labels_.size()));
    if (inserted) labels_.emplace_back(token);
    return it->second;
  }
  std::optional<Vertex> find(const std::string& token) const {
    auto it = ids_.find(token);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return labels_.size(); }
  std::vector<std::string> take_labels() { return std::move(labels_); }

 private:
  std::unordered_map<std::string, Vertex> ids_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// GML

struct GmlToken {
  enum Kind { key, number, string, open, close, end } kind;
  std::string text;
  std::size_t line;
};

class GmlLexer {
 public:
  explicit GmlLexer(std::string_view text) : text_(text) {}

  GmlToken next() {
    skip_space_and_comments();
    if (pos_ >= text_.size()) return {GmlToken::end, {}, line_};
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      return {GmlToken::open, "[", line_};
    }
    if (c == ']') {
      ++pos_;
      return {GmlToken::close, "]", line_};
    }
    if (c == '"') {
      const std::size_t start_line = line_;
      std::string s;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') ++line_;
        s.push_back(text_[pos_++]);
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated string", start_line);
      ++pos_;
      return {GmlToken::string, std::move(s), start_line};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return {GmlToken::key, std::string(text_.substr(start, pos_ - start)), line_};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != '[' && text_[pos_] != ']') {
        ++pos_;
      }
      return {GmlToken::number, std::string(text_.substr(start, pos_ - start)), line_};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_);
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

struct GmlValue {
  std::string scalar;  // for numbers and strings
  std::vector<std::pair<std::string, std::unique_ptr<GmlValue>>> children;
  bool is_list = false;
  std::size_t line = 0;

  const GmlValue* child(std::string_view key) const {
    for (const auto& [k, v] : children) {
      if (k == key) return v.get();
    }
    return nullptr;
  }
};

std::unique_ptr<GmlValue> parse_gml_value(GmlLexer& lex, const GmlToken& first);

// Parses key/value pairs until `]` (nested) or end of input (top level).
void parse_gml_list(GmlLexer& lex, GmlValue& into, bool nested) {
  for (;;) {
    GmlToken tok = lex.next();
    if (tok.kind == GmlToken::end) {
      if (nested) throw ParseError("unterminated list", into.line);
      return;
    }
    if (tok.kind == GmlToken::close) {
      if (!nested) throw ParseError("unbalanced ']'", tok.line);
      return;
    }
    if (tok.kind != GmlToken::key) throw ParseError("expected key, got '" + tok.text + "'", tok.line);
    GmlToken value_tok = lex.next();
    if (value_tok.kind == GmlToken::end || value_tok.kind == GmlToken::close) {
      throw ParseError("key '" + tok.text + "' has no value", tok.line);
    }
    into.children.emplace_back(tok.text, parse_gml_value(lex, value_tok));
  }
}

std::unique_ptr<GmlValue> parse_gml_value(GmlLexer& lex, const GmlToken& first) {
  auto value = std::make_unique<GmlValue>();
  value->line = first.line;
  if (first.kind == GmlToken::open) {
    value->is_list = true;
    parse_gml_list(lex, *value, true);
  } else if (first.kind == GmlToken::number || first.kind == GmlToken::string ||
             first.kind == GmlToken::key) {
    value->scalar = first.text;
  } else {
    throw ParseError("unexpected token '" + first.text + "'", first.line);
  }
  return value;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
  LabelInterner interner;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#' || tokens.front().front() == '%') continue;
    if (tokens.size() != 2) {
      throw ParseError("expected 2 vertex tokens, found " + std::to_string(tokens.size()), line_no);
    }
    const Vertex u = interner.intern(tokens[0]);
    const Vertex v = interner.intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  if (interner.size() == 0) throw ParseError("edge list contains no edges", 0);

  ParsedGraph out;
  const std::size_t n = interner.size();
  out.graph = Graph::from_edges(n, edges, interner.take_labels(), &out.dropped);
  return out;
}

ParsedGraph parse_gml(std::string_view text) {
  GmlLexer lex(text);
  GmlValue root;
  parse_gml_list(lex, root, false);

  const GmlValue* graph = root.child("graph");
  if (graph == nullptr || !graph->is_list) throw ParseError("missing 'graph [ ... ]' block", 0);

  LabelInterner ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (const auto& [key, value] : graph->children) {
    if (key != "node") continue;
    if (!value->is_list) throw ParseError("'node' must be a list", value->line);
    const GmlValue* id = value->child("id");
    if (id == nullptr || id->is_list) throw ParseError("node without scalar id", value->line);
    if (ids.find(id->scalar)) throw ParseError("duplicate node id " + id->scalar, value->line);
    ids.intern(id->scalar);
    const GmlValue* label = value->child("label");
    labels.push_back(label != nullptr && !label->is_list ? label->scalar : id->scalar);
  }
  for (const auto& [key, value] : graph->children) {
    if (key != "edge") continue;
    if (!value->is_list) throw ParseError("'edge' must be a list", value->line);
    const GmlValue* source = value->child("source");
    const GmlValue* target = value->child("target");
    if (source == nullptr || target == nullptr || source->is_list || target->is_list) {
      throw ParseError("edge without scalar source and target", value->line);
    }
    const auto u = ids.find(source->scalar);
    const auto v = ids.find(target->scalar);
    if (!u) throw ParseError("edge references unknown node " + source->scalar, value->line);
    if (!v) throw ParseError("edge references unknown node " + target->scalar, value->line);
    edges.emplace_back(*u, *v);
  }
  if (labels.empty()) throw ParseError("graph block has no nodes", graph->line);

  ParsedGraph out;
  const std::size_t n = labels.size();
  out.graph = Graph::from_edges(n, edges, std::move(labels), &out.dropped);
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  bool header = false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 0) continue;
    if (!header) {
      out += "# isolated:";
      header = true;
    }
    out += ' ';
    out += g.label(v);
  }
  if (header) out += '\n';
  return out;
}

ParsedGraph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return format == GraphFormat::gml ? parse_gml(text) : parse_edge_list(text);
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist" || name == "edge_list" || name == "edges") return GraphFormat::edge_list;
  if (name == "gml") return GraphFormat::gml;
  throw GraphError("unknown graph format '" + std::string(name) + "' (expected edgelist or gml)");
}

}  // namespace epithresh
