#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egp/expr.hpp"
#include "egp/graph.hpp"
#include "egp/modarith.hpp"
#include "egp/transforms.hpp"

namespace egp {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogRelation {
  std::string kind;  // twist | dual | equal_row | two_vertex_product
  std::string with;
  std::optional<FourCutSpec> cut;  // twist relations that carry their 4-cut
  std::optional<Rotation> rotation;  // dual relations: plane rotation of decompleted(0)
};

struct CompletedRow {
  std::vector<std::uint64_t> primes;
  std::vector<Residue> values;
};

struct CatalogEntry {
  std::string name;     // P_6_3
  std::string display;  // P_{6,3}
  int loops = 0;
  std::vector<std::string> aliases;
  std::optional<OrientedGraph> completed;  // absent for 8-loop rows without a known edge list
  std::optional<std::vector<Residue>> row;  // canonical residues at Catalog::primes
  std::optional<std::string> expression;
  std::optional<std::string> completed_expression;
  std::optional<CompletedRow> completed_row;
  std::vector<CatalogRelation> relations;
  bool symmetry_zeros = false;  // listed as having zeros at every p = 3 mod 4

  /// Completed graph with `vertex` deleted; throws if the edges are absent.
  OrientedGraph decompleted(std::size_t vertex = 0) const;
  std::optional<Residue> row_value(const std::vector<std::uint64_t>& primes, std::uint64_t p) const;
};

struct Catalog {
  std::vector<std::uint64_t> primes;
  std::vector<CatalogEntry> entries;
  std::vector<BinomialSumExpr> decompleted_expressions;
  std::vector<BinomialSumExpr> completed_expressions;
  std::string checksum;

  /// Accepts P_6_3, P6,3, P_{6,3} or an alias such as C9_1_2 or W4.
  const CatalogEntry& find(std::string_view name) const;
  const CatalogEntry* try_find(std::string_view name) const;
  const BinomialSumExpr* decompleted_expression(const CatalogEntry& e) const;
  const BinomialSumExpr* completed_expression(const CatalogEntry& e) const;
};

/// The bundled catalog. Throws CatalogError on checksum or consistency failure.
const Catalog& load_catalog();

/// Catalog from explicit files (expression files may be empty strings to skip).
Catalog load_catalog_files(const std::string& json_path, const std::string& decompleted_expr_path,
                           const std::string& completed_expr_path);
Catalog parse_catalog(std::string_view json_text, std::string_view decompleted_expr_text,
                      std::string_view completed_expr_text);

/// fnv1a-64 (hex) of the compact, key-sorted serialization of the "entries" array.
std::string catalog_checksum(std::string_view json_text);

/// Raw bundled data.
std::string_view bundled_catalog_json();
std::string_view bundled_decompleted_expressions();
std::string_view bundled_completed_expressions();

}  // namespace egp
