#include "egp/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace egp {

OrientedGraph path_tree(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path: need at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return OrientedGraph(n, std::move(edges), 0);
}

OrientedGraph star_tree(std::size_t n) {
  if (n == 0) throw std::invalid_argument("star: need at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({0, i});
  return OrientedGraph(n, std::move(edges), 0);
}

OrientedGraph prufer_tree(const std::vector<std::size_t>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (auto v : seq) {
    if (v >= n) throw std::invalid_argument("prufer: label out of range");
    ++degree[v];
  }
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (auto v : seq) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    if (--degree[v] == 1) leaves.insert(v);
  }
  const std::size_t a = *leaves.begin();
  const std::size_t b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return OrientedGraph(n, std::move(edges), 0);
}

OrientedGraph wheel(std::size_t w) {
  if (w < 3) throw std::invalid_argument("wheel: need at least 3 rim vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < w; ++i) {
    const std::size_t j = (i + 1) % w;
    edges.push_back({std::min(i, j), std::max(i, j)});
  }
  for (std::size_t i = 0; i < w; ++i) edges.push_back({i, w});
  return OrientedGraph(w + 1, std::move(edges), w);
}

OrientedGraph zigzag(std::size_t m) {
  if (m < 4) throw std::invalid_argument("zigzag: need at least 4 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < m; ++i) edges.push_back({i + 1, i});
  for (std::size_t i = 0; i + 2 < m; ++i) edges.push_back({i + 2, i});
  edges.push_back({m - 1, 0});
  return OrientedGraph(m, std::move(edges), m - 1);
}

OrientedGraph circulant(std::size_t n, std::size_t a, std::size_t b) {
  if (n < 3 || a == 0 || b == 0 || a >= n || b >= n) {
    throw std::invalid_argument("circulant: need n >= 3 and 0 < a, b < n");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t step : {a, b}) {
      const std::size_t j = (i + step) % n;
      std::pair<std::size_t, std::size_t> key{std::min(i, j), std::max(i, j)};
      if (seen.insert(key).second) edges.push_back({key.first, key.second});
    }
  }
  return OrientedGraph(n, std::move(edges), 0);
}

OrientedGraph banana(std::size_t k) {
  if (k == 0) throw std::invalid_argument("banana: need at least one edge");
  return OrientedGraph(2, std::vector<Edge>(k, Edge{0, 1}), 0);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::size_t to_size(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("family parameter '" + what + "' must be a nonnegative integer, got '" + s + "'");
  }
  return std::stoull(s);
}

}  // namespace

OrientedGraph generate_family(const std::string& description) {
  const auto parts = split(description, ':');
  if (parts.empty()) throw std::invalid_argument("empty family description");
  const std::string& kind = parts[0];
  auto need = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      throw std::invalid_argument("family '" + kind + "' expects " + std::to_string(count) + " parameter(s)");
    }
  };
  if (kind == "wheel") {
    need(1);
    return wheel(to_size(parts[1], "w"));
  }
  if (kind == "zigzag") {
    need(1);
    return zigzag(to_size(parts[1], "m"));
  }
  if (kind == "banana") {
    need(1);
    return banana(to_size(parts[1], "k"));
  }
  if (kind == "circulant") {
    need(3);
    return circulant(to_size(parts[1], "n"), to_size(parts[2], "a"), to_size(parts[3], "b"));
  }
  if (kind == "tree") {
    need(2);
    if (parts[1] == "path") return path_tree(to_size(parts[2], "n"));
    if (parts[1] == "star") return star_tree(to_size(parts[2], "n"));
    if (parts[1] == "prufer") {
      std::vector<std::size_t> seq;
      if (!parts[2].empty()) {
        for (const auto& t : split(parts[2], ',')) seq.push_back(to_size(t, "prufer label"));
      }
      return prufer_tree(seq);
    }
    throw std::invalid_argument("unknown tree shape '" + parts[1] + "'");
  }
  throw std::invalid_argument("unknown family '" + kind + "'");
}

}  // namespace egp
