#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "egp/graph.hpp"
#include "egp/modarith.hpp"

namespace egp {

/// Weighted hypergraph encoding a matrix with repeated rows and columns.
/// Vertex v stands for vertex_weights[v] identical rows; hyperedge e for
/// edges[e].weight identical columns whose entry in the rows of v is the
/// coefficient listed for v (zero if v is absent).
struct WeightedState {
  struct HyperEdge {
    std::vector<std::pair<std::size_t, std::int64_t>> incidences;  // (vertex, coefficient)
    std::uint64_t weight = 0;
  };

  std::vector<std::uint64_t> vertex_weights;
  std::vector<HyperEdge> edges;
  std::uint64_t modulus = 2;
};

enum class EliminationOrder {
  heuristic,  // forced edges and leaves first, then the busiest vertex
  index,      // plain vertex expansion in index order
};

struct CofactorStats {
  std::size_t memo_entries = 0;
  std::size_t expansions = 0;
};

/// Permanent residue of the matrix represented by `state`, by repeated vertex
/// expansion (a multinomial split of a vertex's rows across its edges) and
/// forced edge removal (an edge with one live endpoint takes a falling
/// factorial of that endpoint's rows). Memoized per call on the weight vector.
Residue cofactor_calculus(const WeightedState& state, EliminationOrder order = EliminationOrder::heuristic,
                          CofactorStats* stats = nullptr);

/// State for Perm(1_{row_reps x col_reps} (x) M) where M is the reduced incidence
/// matrix of g: one vertex per non-special vertex, one edge per graph edge.
WeightedState state_from_graph(const OrientedGraph& g, std::uint64_t row_reps, std::uint64_t col_reps,
                               std::uint64_t p);

}  // namespace egp
