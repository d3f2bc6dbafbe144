#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "egp/graph.hpp"
#include "egp/graph_io.hpp"

namespace egp {

/// Four cut vertices v1..v4 and the vertices on the left of the cut.
/// Edges with an endpoint on the left, and edges joining two cut vertices,
/// belong to the left side; all others to the right.
struct FourCutSpec {
  std::array<std::size_t, 4> cut{};
  std::vector<std::size_t> left;
};

/// Exchanges v1 <-> v2 and v3 <-> v4 on every right-side edge. Edge order and
/// orientation are kept.
OrientedGraph schnetz_twist(const OrientedGraph& g, const FourCutSpec& cut);

struct PlanarDual {
  OrientedGraph graph;  // edge i crosses edge i of the primal
  Rotation rotation;    // embedding of the dual read off the primal faces
  /// Primal face index of each dart: face_of_dart[2e] is the face traced from the
  /// tail side of edge e, face_of_dart[2e+1] from the head side.
  std::vector<std::size_t> face_of_dart;
};

/// Number of faces of the embedding described by `rotation`.
std::size_t face_count(const OrientedGraph& g, const Rotation& rotation);

/// Dual of a connected plane graph. Dual edge i runs from the face traced by
/// the tail dart of primal edge i to the face traced by its head dart; the
/// dual's special vertex is 0. Throws if the rotation is not a genus-0 embedding.
PlanarDual planar_dual(const OrientedGraph& g, const Rotation& rotation);

/// Splits g across the 2-vertex cut {v1, v2}. The first side holds the component
/// of g - {v1, v2} containing its lowest vertex, the second everything else; both
/// receive a new edge v1 -> v2 (appended last). Edges joining v1 and v2
/// directly go to the first side. The special vertex is kept where it lies on a
/// side, otherwise vertex 0 of that side is special.
std::pair<OrientedGraph, OrientedGraph> two_vertex_split(const OrientedGraph& g, std::size_t v1, std::size_t v2);

struct Involution {
  std::vector<std::size_t> permutation;
  std::size_t crossing_edge_count = 0;  // edges uv with tau(u) = v
  std::size_t fixed_vertex_count = 0;
};

inline constexpr std::size_t kInvolutionVertexCap = 16;

/// All non-identity involutive automorphisms of the underlying undirected multigraph.
std::vector<Involution> find_involutions(const OrientedGraph& g);

/// Some involution has an odd number of crossing edges and a fixed vertex.
bool symmetry_zero_predicate(const OrientedGraph& g);

}  // namespace egp
