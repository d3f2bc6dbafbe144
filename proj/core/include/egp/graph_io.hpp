#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egp/graph.hpp"

namespace egp {

/// Cyclic order of edge indices around each vertex. A loop is listed twice at
/// its vertex; the first occurrence is the tail side.
struct Rotation {
  std::vector<std::vector<std::size_t>> order;

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

struct GraphDocument {
  OrientedGraph graph;
  std::optional<Rotation> rotation;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text format:
///   V <n> SPECIAL <k>
///   <tail> <head>        one per edge, in column order
///   ROT <v>: <e> <e> ... optional, one line per vertex
/// Anything after '#' is a comment.
GraphDocument parse_graph_text(std::string_view text);
std::string serialize_graph(const OrientedGraph& g, const std::optional<Rotation>& rotation = std::nullopt);
inline std::string serialize_graph(const GraphDocument& doc) { return serialize_graph(doc.graph, doc.rotation); }

GraphDocument read_graph_file(const std::string& path);

/// Checks that every edge index appears exactly once at each endpoint (twice at a loop).
void validate_rotation(const OrientedGraph& g, const Rotation& rot);

}  // namespace egp
