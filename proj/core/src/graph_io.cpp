#include "egp/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace egp {

namespace {

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  std::string s(line.substr(0, hash));
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  }
  try {
    return std::stoull(tok);
  } catch (const std::out_of_range&) {
    throw ParseError(line, "integer out of range: " + tok);
  }
}

}  // namespace

GraphDocument parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::size_t> vertex_count;
  std::size_t special = 0;
  std::vector<Edge> edges;
  std::vector<std::optional<std::vector<std::size_t>>> rot;
  bool saw_rot = false;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (!vertex_count) {
      std::string n, kw, k, extra;
      if (tok != "V") throw ParseError(lineno, "expected header 'V <n> SPECIAL <k>'");
      ls >> n >> kw >> k;
      if (kw != "SPECIAL" || (ls >> extra)) throw ParseError(lineno, "malformed header");
      vertex_count = parse_index(n, lineno);
      special = parse_index(k, lineno);
      if (*vertex_count == 0) throw ParseError(lineno, "graph must have at least one vertex");
      if (special >= *vertex_count) throw ParseError(lineno, "special vertex out of range");
      rot.assign(*vertex_count, std::nullopt);
      continue;
    }
    if (tok == "ROT") {
      saw_rot = true;
      std::string vtok;
      ls >> vtok;
      if (vtok.empty() || vtok.back() != ':') throw ParseError(lineno, "expected 'ROT <v>: ...'");
      vtok.pop_back();
      const std::size_t v = parse_index(vtok, lineno);
      if (v >= *vertex_count) throw ParseError(lineno, "rotation vertex out of range");
      if (rot[v]) throw ParseError(lineno, "duplicate rotation for vertex " + vtok);
      std::vector<std::size_t> order;
      std::string etok;
      while (ls >> etok) order.push_back(parse_index(etok, lineno));
      rot[v] = std::move(order);
      continue;
    }
    if (saw_rot) throw ParseError(lineno, "edge lines must precede the ROT section");
    std::string htok, extra;
    ls >> htok;
    if (htok.empty() || (ls >> extra)) throw ParseError(lineno, "expected '<tail> <head>'");
    const std::size_t t = parse_index(tok, lineno);
    const std::size_t h = parse_index(htok, lineno);
    if (t >= *vertex_count || h >= *vertex_count) throw ParseError(lineno, "edge endpoint out of range");
    edges.push_back({t, h});
  }
  if (!vertex_count) throw ParseError(lineno, "missing header");

  GraphDocument doc{OrientedGraph(*vertex_count, std::move(edges), special), std::nullopt};
  if (saw_rot) {
    Rotation r;
    for (std::size_t v = 0; v < rot.size(); ++v) {
      if (!rot[v]) throw ParseError(lineno, "rotation missing for vertex " + std::to_string(v));
      r.order.push_back(*rot[v]);
    }
    try {
      validate_rotation(doc.graph, r);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    doc.rotation = std::move(r);
  }
  return doc;
}

std::string serialize_graph(const OrientedGraph& g, const std::optional<Rotation>& rotation) {
  std::ostringstream out;
  out << "V " << g.vertex_count() << " SPECIAL " << g.special_vertex() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
  if (rotation) {
    for (std::size_t v = 0; v < rotation->order.size(); ++v) {
      out << "ROT " << v << ':';
      for (auto e : rotation->order[v]) out << ' ' << e;
      out << '\n';
    }
  }
  return out.str();
}

GraphDocument read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

void validate_rotation(const OrientedGraph& g, const Rotation& rot) {
  if (rot.order.size() != g.vertex_count()) throw std::invalid_argument("rotation: wrong vertex count");
  std::vector<std::size_t> seen(g.edge_count(), 0);
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    for (auto e : rot.order[v]) {
      if (e >= g.edge_count()) throw std::invalid_argument("rotation: edge index out of range");
      const Edge& ed = g.edge(e);
      if (ed.tail != v && ed.head != v) {
        throw std::invalid_argument("rotation: edge " + std::to_string(e) + " is not incident to vertex " +
                                    std::to_string(v));
      }
      ++seen[e];
    }
  }
  for (std::size_t e = 0; e < seen.size(); ++e) {
    if (seen[e] != 2) throw std::invalid_argument("rotation: edge " + std::to_string(e) + " must appear twice");
  }
}

}  // namespace egp
