#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egp/catalog.hpp"
#include "egp/egp.hpp"
#include "egp/graph.hpp"

namespace egp::suites {

struct SuiteOptions {
  std::uint64_t bound = 41;        // long-range prime bound
  std::uint64_t small_bound = 13;  // multi-algorithm and exhaustive-property bound
  std::uint64_t completed_bound = 43;
  int max_loops = 7;
  unsigned threads = 0;
  std::uint64_t seed = 0x5eed2024;
  std::size_t random_pairs = 10;
  std::size_t random_trees = 25;
  std::size_t regular_vertex_cap = 8;
  std::vector<OrientedGraph> regular_graphs;  // extra 4-regular graphs for decompletion invariance
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what);
  void note(const std::string& what) { notes.push_back(what); }
  std::string summary() const;
};

/// appendix-a, appendix-c, closed-forms, invariance, symmetry, vanishing,
/// pointcount, modform, equalities (in that order).
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const Catalog& cat, const SuiteOptions& opts);

/// Stored row of a decompleted catalog graph as a canonical sequence.
EgpSequence row_sequence(const Catalog& cat, const CatalogEntry& e);
/// canonicalize_sign(egp(...)) with the given algorithm.
EgpSequence canonical_egp(const OrientedGraph& g, std::uint64_t bound, Algorithm alg, unsigned threads,
                          const std::string& id = {});

}  // namespace egp::suites
