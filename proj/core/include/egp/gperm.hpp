#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "egp/cofactor.hpp"
#include "egp/graph.hpp"
#include "egp/modarith.hpp"

namespace egp {

class NotAdmissible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n with p = n * calV + 1, or nullopt when p is not prime or not of that form.
std::optional<std::uint64_t> prime_index(const BlockSpec& spec, std::uint64_t p);
/// Same, but throws NotAdmissible.
std::uint64_t require_prime_index(const BlockSpec& spec, std::uint64_t p);

/// n * calE odd: the residue flips sign with the orientation.
bool is_variate(const BlockSpec& spec, std::uint64_t n);

/// Perm(1_{n calV x n calE} (x) M) mod p by Ryser on the materialized matrix.
Residue gperm_direct(const OrientedGraph& g, std::uint64_t p);

/// Row reduce M to [I | A] and expand the identity columns:
///   ((n calV)! / (n calV - n calE)!)^{|V|-1} * Perm(1_{(n calV - n calE) x n calE} (x) A).
Residue gperm_reduced(const OrientedGraph& g, std::uint64_t p);

/// Weighted-graph cofactor calculus on the original incidence structure.
Residue gperm_cofactor(const OrientedGraph& g, std::uint64_t p,
                       EliminationOrder order = EliminationOrder::heuristic);

}  // namespace egp
