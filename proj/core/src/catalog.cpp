#include "egp/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace egp {

namespace detail {
extern const std::string_view kCatalogJson;
extern const std::string_view kDecompletedExpr;
extern const std::string_view kCompletedExpr;
}  // namespace detail

std::string_view bundled_catalog_json() { return detail::kCatalogJson; }
std::string_view bundled_decompleted_expressions() { return detail::kDecompletedExpr; }
std::string_view bundled_completed_expressions() { return detail::kCompletedExpr; }

using nlohmann::json;

OrientedGraph CatalogEntry::decompleted(std::size_t vertex) const {
  if (!completed) throw CatalogError("catalog entry " + name + " has no edge list");
  return decomplete(*completed, vertex);
}

std::optional<Residue> CatalogEntry::row_value(const std::vector<std::uint64_t>& primes, std::uint64_t p) const {
  if (!row) return std::nullopt;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i] == p) return (*row)[i];
  return std::nullopt;
}

namespace {

std::string normalize(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '{' || c == '}' || c == ',' || c == ' ' || c == '^') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CatalogEntry parse_entry(const json& j, const std::vector<std::uint64_t>& primes) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.display = j.at("display").get<std::string>();
  e.loops = j.at("loops").get<int>();
  e.aliases = j.at("aliases").get<std::vector<std::string>>();
  const json& edges = j.at("edges");
  if (edges.is_array()) {
    std::vector<Edge> list;
    for (const auto& pair : edges) list.push_back({pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>()});
    const auto n = j.at("vertices").get<std::size_t>();
    e.completed = OrientedGraph(n, std::move(list), 0);
    for (auto d : e.completed->degrees())
      if (d != 4) throw CatalogError("catalog entry " + e.name + " is not 4-regular");
  } else if (edges != "absent") {
    throw CatalogError("catalog entry " + e.name + ": edges must be a list or \"absent\"");
  }
  if (!j.at("row").is_null()) {
    auto row = j.at("row").get<std::vector<Residue>>();
    if (row.size() != primes.size()) throw CatalogError("catalog entry " + e.name + ": row length mismatch");
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] >= primes[i]) throw CatalogError("catalog entry " + e.name + ": row value out of range");
    e.row = std::move(row);
  }
  if (!j.at("expression").is_null()) e.expression = j.at("expression").get<std::string>();
  if (!j.at("completed_expression").is_null()) e.completed_expression = j.at("completed_expression").get<std::string>();
  if (j.contains("completed_row")) {
    CompletedRow r{j["completed_row"].at("primes").get<std::vector<std::uint64_t>>(),
                   j["completed_row"].at("values").get<std::vector<Residue>>()};
    if (r.primes.size() != r.values.size()) throw CatalogError("catalog entry " + e.name + ": completed row mismatch");
    e.completed_row = std::move(r);
  }
  for (const auto& r : j.at("relations")) {
    CatalogRelation rel{r.at("kind").get<std::string>(), r.at("with").get<std::string>(), std::nullopt, std::nullopt};
    if (r.contains("rotation")) rel.rotation = Rotation{r["rotation"].get<std::vector<std::vector<std::size_t>>>()};
    if (r.contains("cut")) {
      FourCutSpec cut;
      const auto v = r["cut"].get<std::vector<std::size_t>>();
      if (v.size() != 4) throw CatalogError("catalog entry " + e.name + ": a cut needs four vertices");
      std::copy(v.begin(), v.end(), cut.cut.begin());
      cut.left = r.at("left").get<std::vector<std::size_t>>();
      rel.cut = std::move(cut);
    }
    e.relations.push_back(std::move(rel));
  }
  e.symmetry_zeros = j.at("symmetry_zeros").get<bool>();
  return e;
}

}  // namespace

std::string catalog_checksum(std::string_view json_text) {
  const json doc = json::parse(json_text);
  return fnv1a64(doc.at("entries").dump());
}

Catalog parse_catalog(std::string_view json_text, std::string_view decompleted_expr_text,
                      std::string_view completed_expr_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw CatalogError(std::string("catalog: ") + ex.what());
  }
  Catalog cat;
  try {
    cat.checksum = doc.at("checksum").get<std::string>();
    const std::string actual = fnv1a64(doc.at("entries").dump());
    if (actual != cat.checksum) {
      throw CatalogError("catalog checksum mismatch: stored " + cat.checksum + ", computed " + actual);
    }
    cat.primes = doc.at("primes").get<std::vector<std::uint64_t>>();
    for (const auto& j : doc.at("entries")) cat.entries.push_back(parse_entry(j, cat.primes));
  } catch (const json::exception& ex) {
    throw CatalogError(std::string("catalog: ") + ex.what());
  }
  if (!decompleted_expr_text.empty()) cat.decompleted_expressions = parse_expressions(decompleted_expr_text);
  if (!completed_expr_text.empty()) cat.completed_expressions = parse_expressions(completed_expr_text);

  std::set<std::string> names;
  for (const auto& e : cat.entries)
    if (!names.insert(e.name).second) throw CatalogError("duplicate catalog entry " + e.name);
  for (const auto& e : cat.entries) {
    for (const auto& r : e.relations)
      if (!names.count(r.with)) throw CatalogError("catalog entry " + e.name + " relates to unknown " + r.with);
    if (e.expression && !cat.decompleted_expressions.empty() && !cat.decompleted_expression(e)) {
      throw CatalogError("catalog entry " + e.name + ": expression " + *e.expression + " not found");
    }
    if (e.completed_expression && !cat.completed_expressions.empty() && !cat.completed_expression(e)) {
      throw CatalogError("catalog entry " + e.name + ": completed expression not found");
    }
  }
  return cat;
}

Catalog load_catalog_files(const std::string& json_path, const std::string& decompleted_expr_path,
                           const std::string& completed_expr_path) {
  const std::string j = slurp(json_path);
  const std::string d = decompleted_expr_path.empty() ? std::string() : slurp(decompleted_expr_path);
  const std::string c = completed_expr_path.empty() ? std::string() : slurp(completed_expr_path);
  return parse_catalog(j, d, c);
}

const Catalog& load_catalog() {
  static const Catalog cat = parse_catalog(bundled_catalog_json(), bundled_decompleted_expressions(),
                                           bundled_completed_expressions());
  return cat;
}

const CatalogEntry* Catalog::try_find(std::string_view name) const {
  const std::string key = normalize(name);
  for (const auto& e : entries) {
    if (normalize(e.name) == key || normalize(e.display) == key) return &e;
    for (const auto& a : e.aliases)
      if (normalize(a) == key) return &e;
  }
  return nullptr;
}

const CatalogEntry& Catalog::find(std::string_view name) const {
  if (const auto* e = try_find(name)) return *e;
  throw CatalogError("unknown catalog graph '" + std::string(name) + "'");
}

const BinomialSumExpr* Catalog::decompleted_expression(const CatalogEntry& e) const {
  if (!e.expression) return nullptr;
  for (const auto& x : decompleted_expressions)
    if (x.id == *e.expression) return &x;
  return nullptr;
}

const BinomialSumExpr* Catalog::completed_expression(const CatalogEntry& e) const {
  if (!e.completed_expression) return nullptr;
  for (const auto& x : completed_expressions)
    if (x.id == *e.completed_expression) return &x;
  return nullptr;
}

}  // namespace egp
