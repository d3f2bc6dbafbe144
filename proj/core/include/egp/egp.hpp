#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "egp/graph.hpp"
#include "egp/modarith.hpp"

namespace egp {

enum class Algorithm { direct, reduced, cofactor, automatic };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm a);

struct EgpValue {
  std::uint64_t prime = 0;
  std::uint64_t n = 0;  // prime = n * calV + 1
  std::optional<Residue> residue;
  bool variate = false;  // n * calE odd
  std::string absent_reason;

  friend bool operator==(const EgpValue&, const EgpValue&) = default;
};

struct EgpSequence {
  std::string graph_id;
  BlockSpec spec;
  std::vector<EgpValue> values;
  bool canonicalized = false;

  const EgpValue* at_prime(std::uint64_t p) const;
};

/// Primes p <= bound with p = n * calV + 1, n >= 1.
std::vector<std::uint64_t> admissible_primes(const BlockSpec& spec, std::uint64_t bound);

struct EgpOptions {
  Algorithm algorithm = Algorithm::automatic;
  /// Identify one vertex of each component with the special vertex instead of
  /// reporting zeros for a disconnected graph.
  bool join_components = false;
  /// Worker threads for the per-prime loop; 0 picks hardware concurrency.
  unsigned threads = 0;
  std::string graph_id;
};

/// Uncanonicalized sequence under the stored orientation. Primes where the
/// chosen algorithm hits a size cap are kept as absent entries.
EgpSequence egp(const OrientedGraph& g, std::uint64_t bound, const EgpOptions& options = {});

/// Single residue by the named algorithm (automatic picks per prime).
Residue gperm(const OrientedGraph& g, std::uint64_t p, Algorithm algorithm);

/// Flips every variate residue when the first nonzero variate residue r has r > p - r.
EgpSequence canonicalize_sign(EgpSequence s);

/// True iff the canonical forms agree at every prime present in both.
/// Throws std::invalid_argument if the sequences live on different prime sets.
bool sequences_equal(const EgpSequence& a, const EgpSequence& b);

/// Residues equal, or negatives of each other at a variate prime.
bool equal_up_to_variate_sign(Residue a, Residue b, std::uint64_t p, bool variate);

}  // namespace egp
