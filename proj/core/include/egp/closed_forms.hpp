#pragma once

#include <cstdint>

#include "egp/modarith.hpp"

namespace egp {

/// (-1)^{|V|-1} mod p: the residue of any tree on vertex_count vertices.
Residue closed_form_tree(std::uint64_t vertex_count, std::uint64_t p);

/// Wheel with w rim vertices at p = 2n+1:
///   (-1)^w sum_{k=0..n} (-1)^{kw} C(n,k)^w.
Residue closed_form_wheel(std::uint64_t w, std::uint64_t p);

/// Zigzag on m vertices at p = 2n+1:
///   (-1)^{m-1} sum_{k_1+...+k_{m-1}=n} prod_i C(n,k_i) prod_{i=1..m-3} C(n-k_{i+1}, k_1+...+k_i).
Residue closed_form_zigzag(std::uint64_t m, std::uint64_t p);

}  // namespace egp
