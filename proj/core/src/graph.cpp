#include "egp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "egp/modarith.hpp"

namespace egp {

OrientedGraph::OrientedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                             std::size_t special_vertex)
    : vertex_count_(vertex_count), edges_(std::move(edges)), special_(special_vertex) {
  if (vertex_count_ == 0) throw std::invalid_argument("graph must have at least one vertex");
  if (special_ >= vertex_count_) {
    throw std::invalid_argument("special vertex " + std::to_string(special_) + " out of range");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.is_loop()) ++loop_count_;
  }
}

std::vector<std::size_t> OrientedGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return deg;
}

std::vector<std::size_t> OrientedGraph::incident_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].tail == v || edges_[i].head == v) out.push_back(i);
  }
  return out;
}

OrientedGraph OrientedGraph::with_special(std::size_t v) const {
  return OrientedGraph(vertex_count_, edges_, v);
}

OrientedGraph OrientedGraph::with_flips(std::span<const bool> flip) const {
  if (flip.size() != edges_.size()) throw std::invalid_argument("with_flips: size mismatch");
  std::vector<Edge> out = edges_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (flip[i]) std::swap(out[i].tail, out[i].head);
  }
  return OrientedGraph(vertex_count_, std::move(out), special_);
}

OrientedGraph build_graph(std::span<const Edge> edges, std::size_t vertex_count,
                          std::size_t special_vertex) {
  return OrientedGraph(vertex_count, std::vector<Edge>(edges.begin(), edges.end()), special_vertex);
}

IntMatrix full_incidence(const OrientedGraph& g) {
  IntMatrix m(g.vertex_count(), g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    if (e.is_loop()) continue;
    m(e.head, j) = 1;
    m(e.tail, j) = -1;
  }
  return m;
}

SignedIncidence reduced_incidence(const OrientedGraph& g) {
  if (g.vertex_count() < 2) throw std::invalid_argument("reduced incidence needs at least two vertices");
  const IntMatrix full = full_incidence(g);
  SignedIncidence out;
  out.matrix = IntMatrix(g.vertex_count() - 1, g.edge_count());
  std::size_t r = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == g.special_vertex()) continue;
    for (std::size_t j = 0; j < g.edge_count(); ++j) out.matrix(r, j) = full(v, j);
    out.row_vertex.push_back(v);
    ++r;
  }
  return out;
}

BlockSpec block_spec(std::size_t vertex_count, std::size_t edge_count) {
  if (vertex_count < 2) throw std::invalid_argument("block_spec needs at least two vertices");
  if (edge_count == 0) throw std::invalid_argument("block_spec needs at least one edge");
  BlockSpec s;
  s.lcm = lcm_u64(vertex_count - 1, edge_count);
  s.row_copies = s.lcm / (vertex_count - 1);
  s.column_copies = s.lcm / edge_count;
  return s;
}

BlockSpec block_spec(const OrientedGraph& g) { return block_spec(g.vertex_count(), g.edge_count()); }

bool is_phi4_ratio(const OrientedGraph& g) {
  return g.vertex_count() >= 2 && g.edge_count() == 2 * (g.vertex_count() - 1);
}

OrientedGraph duplicate_edges(const OrientedGraph& g, std::size_t n) {
  if (n == 0) throw std::invalid_argument("duplicate_edges: n must be positive");
  std::vector<Edge> out;
  out.reserve(g.edge_count() * n);
  for (std::size_t b = 0; b < n; ++b) out.insert(out.end(), g.edges().begin(), g.edges().end());
  return OrientedGraph(g.vertex_count(), std::move(out), g.special_vertex());
}

OrientedGraph complete(const OrientedGraph& g) {
  const auto deg = g.degrees();
  std::size_t deficiency = 0;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] > 4) {
      throw std::invalid_argument("completion impossible: vertex " + std::to_string(v) +
                                  " has degree above 4");
    }
    deficiency += 4 - deg[v];
  }
  if (deficiency != 4) {
    throw std::invalid_argument("completion impossible: degree deficiency is " +
                                std::to_string(deficiency) + ", not 4");
  }
  const std::size_t added = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (std::size_t v = 0; v < deg.size(); ++v) {
    for (std::size_t k = deg[v]; k < 4; ++k) edges.push_back({v, added});
  }
  return OrientedGraph(added + 1, std::move(edges), g.special_vertex());
}

OrientedGraph decomplete(const OrientedGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("decomplete: vertex out of range");
  if (g.vertex_count() < 2) throw std::invalid_argument("decomplete: graph too small");
  auto shift = [v](std::size_t u) { return u > v ? u - 1 : u; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.tail == v || e.head == v) continue;
    edges.push_back({shift(e.tail), shift(e.head)});
  }
  const std::size_t special = g.special_vertex() == v ? 0 : shift(g.special_vertex());
  return OrientedGraph(g.vertex_count() - 1, std::move(edges), special);
}

OrientedGraph induced_subgraph(const OrientedGraph& g, std::span<const std::size_t> keep,
                               std::size_t special_vertex) {
  std::vector<std::size_t> index(g.vertex_count(), g.vertex_count());
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.tail] == g.vertex_count() || index[e.head] == g.vertex_count()) continue;
    edges.push_back({index[e.tail], index[e.head]});
  }
  return OrientedGraph(keep.size(), std::move(edges), special_vertex);
}

std::vector<std::vector<std::size_t>> connected_components(const OrientedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    auto a = find(e.tail), b = find(e.head);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    auto r = find(v);
    if (slot[r] == n) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

bool is_connected(const OrientedGraph& g) { return connected_components(g).size() == 1; }

OrientedGraph join_components_at_special(const OrientedGraph& g) {
  const auto comps = connected_components(g);
  if (comps.size() == 1) return g;
  const std::size_t s = g.special_vertex();
  // Map each component root onto s, then compact the remaining labels.
  std::vector<std::size_t> target(g.vertex_count());
  std::iota(target.begin(), target.end(), 0);
  for (const auto& comp : comps) {
    if (std::find(comp.begin(), comp.end(), s) != comp.end()) continue;
    target[comp.front()] = s;
  }
  std::vector<std::size_t> compact(g.vertex_count(), g.vertex_count());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (target[v] == v) compact[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({compact[target[e.tail]], compact[target[e.head]]});
  return OrientedGraph(next, std::move(edges), compact[s]);
}

OrientedGraph relabel(const OrientedGraph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("relabel: size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.tail], perm[e.head]});
  return OrientedGraph(g.vertex_count(), std::move(edges), perm[g.special_vertex()]);
}

std::vector<std::vector<std::size_t>> adjacency_counts(const OrientedGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    ++adj[e.tail][e.head];
    if (!e.is_loop()) ++adj[e.head][e.tail];
  }
  return adj;
}

namespace {

struct IsoSearch {
  const std::vector<std::vector<std::size_t>>& adj_a;
  const std::vector<std::vector<std::size_t>>& adj_b;
  std::vector<std::size_t> order;       // vertices of a in assignment order
  std::vector<std::size_t> invariant_a; // per-vertex invariant used for pruning
  std::vector<std::size_t> invariant_b;
  std::vector<std::size_t> map;         // a -> b
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t u = order[depth];
    for (std::size_t w = 0; w < adj_b.size(); ++w) {
      if (used[w] || invariant_a[u] != invariant_b[w]) continue;
      if (adj_a[u][u] != adj_b[w][w]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t x = order[d];
        ok = adj_a[u][x] == adj_b[w][map[x]];
      }
      if (!ok) continue;
      map[u] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

std::vector<std::size_t> vertex_invariants(const std::vector<std::vector<std::size_t>>& adj) {
  // Degree combined with the sorted multiset of neighbour degrees.
  const std::size_t n = adj.size();
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) deg[v] += adj[v][w] * (v == w ? 2 : 1);
  std::vector<std::size_t> inv(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nd;
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t k = 0; k < adj[v][w]; ++k) nd.push_back(deg[w]);
    std::sort(nd.begin(), nd.end());
    std::size_t h = deg[v] * 1000003U;
    for (auto d : nd) h = h * 131U + d + 1;
    inv[v] = h;
  }
  return inv;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const OrientedGraph& a,
                                                         const OrientedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  const auto adj_a = adjacency_counts(a);
  const auto adj_b = adjacency_counts(b);
  IsoSearch search{adj_a, adj_b, {}, vertex_invariants(adj_a), vertex_invariants(adj_b),
                   std::vector<std::size_t>(a.vertex_count(), 0),
                   std::vector<bool>(a.vertex_count(), false)};
  auto ia = search.invariant_a, ib = search.invariant_b;
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;
  // BFS order keeps each new vertex adjacent to already-placed ones.
  std::vector<bool> seen(a.vertex_count(), false);
  for (std::size_t start = 0; start < a.vertex_count(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::size_t head = search.order.size();
    search.order.push_back(start);
    while (head < search.order.size()) {
      const std::size_t v = search.order[head++];
      for (std::size_t w = 0; w < a.vertex_count(); ++w) {
        if (!seen[w] && adj_a[v][w] > 0) {
          seen[w] = true;
          search.order.push_back(w);
        }
      }
    }
  }
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

}  // namespace egp
