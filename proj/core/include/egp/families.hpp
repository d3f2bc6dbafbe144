#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "egp/graph.hpp"

namespace egp {

// Vertex numbering and orientations are fixed so results are reproducible:
//
//   path(n)        vertices 0..n-1, edges i -> i+1, special 0
//   star(n)        centre 0, edges 0 -> i, special 0
//   prufer(seq)    tree decoded from a Pruefer sequence, tail = smaller endpoint, special 0
//   wheel(w)       rim 0..w-1 with edges min(i,i+1) -> max, spokes i -> w; apex w is special
//   zigzag(m)      vertices 0..m-1, special m-1; path edges i+1 -> i (i < m-1),
//                  skip edges i+2 -> i (i < m-2), closing edge m-1 -> 0
//   circulant(n,a,b) vertices 0..n-1, edges {i,i+a}, {i,i+b} (set semantics, tail = smaller), special 0
//   banana(k)      two vertices, k parallel edges 0 -> 1, special 0

OrientedGraph path_tree(std::size_t n);
OrientedGraph star_tree(std::size_t n);
OrientedGraph prufer_tree(const std::vector<std::size_t>& sequence);
OrientedGraph wheel(std::size_t w);
OrientedGraph zigzag(std::size_t m);
OrientedGraph circulant(std::size_t n, std::size_t a, std::size_t b);
OrientedGraph banana(std::size_t k);

/// Parses a family description such as "wheel:5", "circulant:8:1:3",
/// "tree:path:4", "tree:prufer:0,0,3" or "banana:2".
OrientedGraph generate_family(const std::string& description);

}  // namespace egp
