#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "egp/matrix.hpp"

namespace egp {

/// Directed edge. The head receives +1 in the signed incidence matrix and the tail -1.
struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Oriented multigraph with a designated special vertex.
///
/// Vertices are 0-based. Edge order is significant: it is the column order of
/// every incidence matrix built from the graph. Parallel edges and loops are
/// allowed; a loop contributes an all-zero incidence column.
class OrientedGraph {
 public:
  OrientedGraph(std::size_t vertex_count, std::vector<Edge> edges, std::size_t special_vertex);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t special_vertex() const { return special_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  bool has_loops() const { return loop_count_ > 0; }
  std::size_t loop_count() const { return loop_count_; }

  /// Undirected degree; a loop counts twice.
  std::vector<std::size_t> degrees() const;
  /// Edge indices incident to v (a loop appears once).
  std::vector<std::size_t> incident_edges(std::size_t v) const;

  OrientedGraph with_special(std::size_t v) const;
  /// Same edges, with edge i reversed wherever flip[i] is true.
  OrientedGraph with_flips(std::span<const bool> flip) const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::size_t special_;
  std::size_t loop_count_ = 0;
};

OrientedGraph build_graph(std::span<const Edge> edges, std::size_t vertex_count,
                          std::size_t special_vertex);

/// Signed incidence matrix with the special vertex's row deleted.
struct SignedIncidence {
  IntMatrix matrix;                    // (|V|-1) x |E|
  std::vector<std::size_t> row_vertex; // row index -> vertex
};

/// Full |V| x |E| signed incidence matrix (no row deleted).
IntMatrix full_incidence(const OrientedGraph& g);
SignedIncidence reduced_incidence(const OrientedGraph& g);

/// Block dimensions of the fundamental matrix 1_{row_copies x column_copies} (x) M.
struct BlockSpec {
  std::uint64_t lcm = 0;            // lcm(|V|-1, |E|)
  std::uint64_t row_copies = 0;     // lcm / (|V|-1)
  std::uint64_t column_copies = 0;  // lcm / |E|

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

BlockSpec block_spec(const OrientedGraph& g);
BlockSpec block_spec(std::size_t vertex_count, std::size_t edge_count);

/// |E| = 2(|V|-1), the edge/vertex ratio of decompleted 4-regular graphs.
bool is_phi4_ratio(const OrientedGraph& g);

/// Every edge replaced by n parallel copies with the same orientation.
/// Copies are laid out block-wise: edge i of copy b has index b*|E| + i.
OrientedGraph duplicate_edges(const OrientedGraph& g, std::size_t n);

/// Adds the unique vertex (index |V|) that makes a graph with degrees <= 4 4-regular.
OrientedGraph complete(const OrientedGraph& g);
/// Deletes v and its edges; later vertices shift down by one. The special vertex
/// keeps its identity unless it is v, in which case vertex 0 becomes special.
OrientedGraph decomplete(const OrientedGraph& g, std::size_t v);

/// Induced subgraph on `keep` (in the given order); edges keep their relative order.
OrientedGraph induced_subgraph(const OrientedGraph& g, std::span<const std::size_t> keep,
                               std::size_t special_vertex);

std::vector<std::vector<std::size_t>> connected_components(const OrientedGraph& g);
bool is_connected(const OrientedGraph& g);

/// Identifies the lowest vertex of every component without the special vertex
/// with the special vertex, producing a graph with a cut vertex instead of a
/// disconnected one.
OrientedGraph join_components_at_special(const OrientedGraph& g);

/// Relabels vertex v as perm[v]. Edge order and orientation are kept.
OrientedGraph relabel(const OrientedGraph& g, std::span<const std::size_t> perm);

/// Number of parallel edges between each pair, ignoring orientation.
std::vector<std::vector<std::size_t>> adjacency_counts(const OrientedGraph& g);

/// Brute-force undirected multigraph isomorphism for small graphs.
/// Returns perm with perm[v in a] = vertex in b.
std::optional<std::vector<std::size_t>> find_isomorphism(const OrientedGraph& a,
                                                         const OrientedGraph& b);
inline bool isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace egp
