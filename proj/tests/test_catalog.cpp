#include <doctest.h>

#include <json.hpp>

#include "egp/catalog.hpp"
#include "egp/graph_io.hpp"

using namespace egp;

TEST_CASE("bundled catalog loads") {
  const Catalog& cat = load_catalog();
  CHECK(cat.entries.size() >= 20);
  CHECK(cat.primes == std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41});
  CHECK(cat.checksum == catalog_checksum(bundled_catalog_json()));
  for (const auto& e : cat.entries) {
    if (!e.row) continue;
    REQUIRE(e.row->size() == cat.primes.size());
    for (std::size_t i = 0; i < cat.primes.size(); ++i) CHECK((*e.row)[i] < cat.primes[i]);
  }
}

TEST_CASE("name lookup") {
  const Catalog& cat = load_catalog();
  const CatalogEntry& a = cat.find("P_6_3");
  CHECK(&cat.find("P6,3") == &a);
  CHECK(&cat.find("P_{6,3}") == &a);
  CHECK(cat.try_find("P_9_99") == nullptr);
  CHECK_THROWS(cat.find("nonsense"));
  CHECK(cat.find("P_5_1").row_value(cat.primes, 11) == Residue{5});
}

TEST_CASE("relations") {
  const Catalog& cat = load_catalog();
  auto has = [&](const char* from, const char* kind, const char* to) {
    for (const auto& r : cat.find(from).relations)
      if (r.kind == kind && r.with == to) return true;
    return false;
  };
  CHECK(has("P_7_4", "twist", "P_7_7"));
  CHECK(has("P_7_7", "twist", "P_7_4"));
  CHECK(has("P_7_5", "dual", "P_7_10"));
  CHECK(has("P_8_3", "equal_row", "P_8_32"));
  CHECK(has("P_3_1_sq", "two_vertex_product", "P_3_1"));
  bool rotation = false;
  for (const auto& r : cat.find("P_7_5").relations)
    if (r.kind == "dual" && r.rotation) {
      validate_rotation(cat.find("P_7_5").decompleted(0), *r.rotation);
      rotation = true;
    }
  CHECK(rotation);
}

TEST_CASE("expressions") {
  const Catalog& cat = load_catalog();
  CHECK(cat.completed_expression(cat.find("P_1_1")) != nullptr);
  CHECK(cat.decompleted_expression(cat.find("P_7_11")) != nullptr);
  const auto& row = cat.find("P_1_1").completed_row;
  REQUIRE(row);
  CHECK(row->primes.front() == 7);
  CHECK(row->values.front() == 6);
}

TEST_CASE("every stored graph survives the text format") {
  for (const auto& e : load_catalog().entries) {
    if (!e.completed) continue;
    CHECK_MESSAGE(parse_graph_text(serialize_graph(*e.completed)).graph == *e.completed, e.name);
    for (auto d : e.completed->degrees()) CHECK(d == 4);
  }
}

TEST_CASE("tampering is detected") {
  auto doc = nlohmann::json::parse(bundled_catalog_json());
  doc["entries"][0]["row"][0] = 2;
  CHECK_THROWS_AS(parse_catalog(doc.dump(), "", ""), CatalogError);
  auto fixed = doc;
  fixed["checksum"] = catalog_checksum(doc.dump());
  CHECK_NOTHROW(parse_catalog(fixed.dump(), "", ""));
}
