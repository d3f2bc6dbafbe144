#include "egp/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "egp/ryser.hpp"

namespace egp {

OrientedGraph schnetz_twist(const OrientedGraph& g, const FourCutSpec& spec) {
  const std::size_t nv = g.vertex_count();
  enum Side { left, right, cut };
  std::vector<Side> side(nv, right);
  for (auto v : spec.cut) {
    if (v >= nv) throw std::invalid_argument("schnetz_twist: cut vertex out of range");
    side[v] = cut;
  }
  if (std::set<std::size_t>(spec.cut.begin(), spec.cut.end()).size() != 4) {
    throw std::invalid_argument("schnetz_twist: cut vertices must be distinct");
  }
  for (auto v : spec.left) {
    if (v >= nv) throw std::invalid_argument("schnetz_twist: left vertex out of range");
    if (side[v] == cut) throw std::invalid_argument("schnetz_twist: a cut vertex is listed on the left");
    side[v] = left;
  }
  if (spec.left.empty() || std::count(side.begin(), side.end(), right) == 0) {
    throw std::invalid_argument("schnetz_twist: both sides must be nonempty");
  }

  auto swap_cut = [&](std::size_t v) {
    const auto& c = spec.cut;
    if (v == c[0]) return c[1];
    if (v == c[1]) return c[0];
    if (v == c[2]) return c[3];
    if (v == c[3]) return c[2];
    return v;
  };

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Side a = side[e.tail], b = side[e.head];
    if ((a == left && b == right) || (a == right && b == left)) {
      throw std::invalid_argument("schnetz_twist: the cut does not separate the two sides");
    }
    if (a == right || b == right) {
      edges.push_back({swap_cut(e.tail), swap_cut(e.head)});
    } else {
      edges.push_back(e);
    }
  }
  OrientedGraph out(nv, std::move(edges), g.special_vertex());
  if (out.degrees() != g.degrees()) {
    throw std::invalid_argument("schnetz_twist: the twist changes the degree sequence");
  }
  return out;
}

namespace {

// Darts: 2e leaves the tail of edge e, 2e+1 leaves its head.
struct DartSystem {
  std::vector<std::size_t> next_in_face;
  std::vector<std::size_t> face_of;
  std::size_t faces = 0;
  std::vector<std::vector<std::size_t>> face_darts;
};

DartSystem trace_faces(const OrientedGraph& g, const Rotation& rot) {
  validate_rotation(g, rot);
  const std::size_t darts = 2 * g.edge_count();
  // Position of every dart in the rotation of its origin vertex.
  std::vector<std::size_t> origin(darts), pos(darts);
  std::vector<std::vector<std::size_t>> dart_rot(g.vertex_count());
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    std::vector<bool> used_tail(g.edge_count(), false);
    for (auto e : rot.order[v]) {
      const Edge& ed = g.edge(e);
      std::size_t d;
      if (ed.is_loop()) {
        d = used_tail[e] ? 2 * e + 1 : 2 * e;
        used_tail[e] = true;
      } else {
        d = ed.tail == v ? 2 * e : 2 * e + 1;
      }
      origin[d] = v;
      pos[d] = dart_rot[v].size();
      dart_rot[v].push_back(d);
    }
  }
  DartSystem s;
  s.next_in_face.resize(darts);
  for (std::size_t d = 0; d < darts; ++d) {
    const std::size_t rev = d ^ 1U;
    const auto& r = dart_rot[origin[rev]];
    s.next_in_face[d] = r[(pos[rev] + 1) % r.size()];
  }
  s.face_of.assign(darts, SIZE_MAX);
  for (std::size_t d = 0; d < darts; ++d) {
    if (s.face_of[d] != SIZE_MAX) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t x = d; s.face_of[x] == SIZE_MAX; x = s.next_in_face[x]) {
      s.face_of[x] = s.faces;
      orbit.push_back(x);
    }
    s.face_darts.push_back(std::move(orbit));
    ++s.faces;
  }
  return s;
}

}  // namespace

std::size_t face_count(const OrientedGraph& g, const Rotation& rotation) { return trace_faces(g, rotation).faces; }

PlanarDual planar_dual(const OrientedGraph& g, const Rotation& rotation) {
  if (!is_connected(g)) throw std::invalid_argument("planar_dual: graph must be connected");
  const DartSystem s = trace_faces(g, rotation);
  const auto v = static_cast<long>(g.vertex_count());
  const auto e = static_cast<long>(g.edge_count());
  const auto f = static_cast<long>(s.faces);
  if (v - e + f != 2) {
    throw std::invalid_argument("planar_dual: rotation is not planar (V - E + F = " + std::to_string(v - e + f) + ")");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) edges.push_back({s.face_of[2 * i], s.face_of[2 * i + 1]});
  PlanarDual out{OrientedGraph(s.faces, std::move(edges), 0), Rotation{}, s.face_of};
  // Around dual vertex f the crossing primal edges appear in face-boundary order.
  for (const auto& orbit : s.face_darts) {
    std::vector<std::size_t> order;
    for (auto d : orbit) order.push_back(d / 2);
    out.rotation.order.push_back(std::move(order));
  }
  // Loops in the dual must list the tail occurrence first; reorder where needed.
  for (std::size_t fv = 0; fv < out.rotation.order.size(); ++fv) {
    const auto& orbit = s.face_darts[fv];
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const std::size_t ed = orbit[k] / 2;
      if (!out.graph.edge(ed).is_loop()) continue;
      // The tail dart of dual edge ed corresponds to primal dart 2*ed; ensure it is listed first.
      auto& ord = out.rotation.order[fv];
      std::size_t first = SIZE_MAX;
      for (std::size_t t = 0; t < ord.size(); ++t)
        if (ord[t] == ed) {
          first = t;
          break;
        }
      if (orbit[first] != 2 * ed) {
        std::rotate(ord.begin(), ord.begin() + static_cast<long>(first) + 1, ord.end());
      }
    }
  }
  return out;
}

std::pair<OrientedGraph, OrientedGraph> two_vertex_split(const OrientedGraph& g, std::size_t v1, std::size_t v2) {
  const std::size_t nv = g.vertex_count();
  if (v1 >= nv || v2 >= nv || v1 == v2) throw std::invalid_argument("two_vertex_split: invalid vertex pair");
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < nv; ++v)
    if (v != v1 && v != v2) rest.push_back(v);
  const OrientedGraph h = induced_subgraph(g, rest, 0);
  const auto comps = connected_components(h);
  if (comps.size() < 2) throw std::invalid_argument("two_vertex_split: {v1, v2} is not a cut");

  std::vector<int> side(nv, 0);
  side[v1] = side[v2] = -1;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto local : comps[c]) side[rest[local]] = c == 0 ? 1 : 2;

  auto build = [&](int which) {
    std::vector<std::size_t> keep{v1, v2};
    for (std::size_t v = 0; v < nv; ++v)
      if (side[v] == which) keep.push_back(v);
    std::vector<std::size_t> index(nv, SIZE_MAX);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      const int a = side[e.tail], b = side[e.head];
      const bool direct = a == -1 && b == -1;
      if ((direct && which == 1) || (!direct && (a == which || b == which))) {
        edges.push_back({index[e.tail], index[e.head]});
      }
    }
    edges.push_back({0, 1});
    const std::size_t s = g.special_vertex();
    const std::size_t special = index[s] != SIZE_MAX ? index[s] : 0;
    return OrientedGraph(keep.size(), std::move(edges), special);
  };
  return {build(1), build(2)};
}

std::vector<Involution> find_involutions(const OrientedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kInvolutionVertexCap) throw CapExceeded("involution search vertex cap", kInvolutionVertexCap, n);
  const auto adj = adjacency_counts(g);
  const auto deg = g.degrees();
  // Sorted neighbour-degree profile prunes candidate images.
  std::vector<std::vector<std::size_t>> profile(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t k = 0; k < adj[v][w]; ++k) profile[v].push_back(deg[w]);
    std::sort(profile[v].begin(), profile[v].end());
  }
  std::vector<Involution> out;
  std::vector<std::size_t> tau(n, SIZE_MAX);

  auto consistent = [&](std::size_t v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (tau[u] == SIZE_MAX) continue;
      if (adj[v][u] != adj[tau[v]][tau[u]]) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t v) -> void {
    while (v < n && tau[v] != SIZE_MAX) ++v;
    if (v == n) {
      bool identity = true;
      for (std::size_t i = 0; i < n; ++i) identity = identity && tau[i] == i;
      if (identity) return;
      Involution inv;
      inv.permutation = tau;
      for (std::size_t i = 0; i < n; ++i) inv.fixed_vertex_count += tau[i] == i ? 1 : 0;
      for (const Edge& e : g.edges()) inv.crossing_edge_count += tau[e.tail] == e.head ? 1 : 0;
      out.push_back(std::move(inv));
      return;
    }
    for (std::size_t w = v; w < n; ++w) {
      if (tau[w] != SIZE_MAX || deg[w] != deg[v] || profile[w] != profile[v]) continue;
      tau[v] = w;
      tau[w] = v;
      if (consistent(v) && (w == v || consistent(w))) self(self, v + 1);
      tau[v] = SIZE_MAX;
      tau[w] = SIZE_MAX;
    }
  };
  search(search, 0);
  return out;
}

bool symmetry_zero_predicate(const OrientedGraph& g) {
  for (const auto& inv : find_involutions(g)) {
    if (inv.crossing_edge_count % 2 == 1 && inv.fixed_vertex_count >= 1) return true;
  }
  return false;
}

}  // namespace egp
