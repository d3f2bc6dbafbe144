#include <doctest.h>

#include <json.hpp>
#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "egp/catalog.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "egp");
  std::ostringstream out, err;
  const int code = egp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute") {
  const Run r = run({"compute", "--graph", "catalog:P_5_1", "--bound", "41", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["residues"].get<std::vector<int>>() == std::vector<int>{1, 1, 1, 5, 12, 16, 11, 13, 7, 1, 25, 9});
  CHECK(j["spec"]["lcm"] == 10);

  const Run text = run({"compute", "catalog:P_5_1", "--bound", "13"});
  CHECK(text.code == 0);
  CHECK(text.out.find("12") != std::string::npos);

  CHECK(run({"compute", "--graph", "catalog:P_99_1"}).code == 2);
  CHECK(run({"compute", "--graph", "file:/nonexistent/graph.txt"}).code == 2);
  CHECK(run({"compute", "--graph", "catalog:P_5_1", "--algorithm", "magic"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("cap exceedances name the cap") {
  ::setenv("EGP_RYSER_CAP", "16", 1);
  const Run r = run({"compute", "catalog:P_7_1", "--algorithm", "direct", "--bound", "13", "--json"});
  ::unsetenv("EGP_RYSER_CAP");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["residues"][0] == 1);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("absent"));
  CHECK(j["absent"]["13"].get<std::string>().find("EGP_RYSER_CAP") != std::string::npos);
}

TEST_CASE("graph resolution") {
  std::string id;
  CHECK(egp::cli::resolve_graph("catalog:P_3_1", &id).vertex_count() == 4);
  CHECK(egp::cli::resolve_graph("catalog:P_3_1:completed").vertex_count() == 5);
  CHECK(egp::cli::resolve_graph("family:wheel:5").edge_count() == 10);
  CHECK(egp::cli::resolve_graph("P6,4").vertex_count() == 7);
  CHECK(egp::cli::resolve_graph("file:" EGP_TEST_DATA_DIR "/k4_plane.txt").edge_count() == 6);
  CHECK_THROWS(egp::cli::resolve_graph("catalog:P_3_1:9"));
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--suite", "invariance", "--bound", "13", "--small-bound", "7"}).code == 0);
  CHECK(run({"verify", "--suite", "modform"}).code == 0);
  CHECK(run({"verify", "--suite", "no-such-suite"}).code == 2);
}

TEST_CASE("table") {
  const Run a = run({"table", "--appendix", "A", "--max-loops", "5", "--bound", "23"});
  CHECK(a.code == 0);
  CHECK(a.out.find("!=") == std::string::npos);
  CHECK(a.out.find("P_5_1") != std::string::npos);
  const Run b = run({"table", "--appendix", "A", "--max-loops", "5", "--bound", "23", "--threads", "1"});
  CHECK(a.out == b.out);
  CHECK(run({"table", "--appendix", "C", "--bound", "19"}).code == 0);
  CHECK(run({"table", "--appendix", "B"}).code == 2);
}

TEST_CASE("pointcount") {
  const Run r = run({"pointcount", "family:banana:2", "-p", "5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 9);
  CHECK(j["count_mod_p"] == 4);
  CHECK(j["coefficient"] == 1);
  CHECK(j["gperm"] == 4);
  CHECK(run({"pointcount", "family:banana:2", "-p", "4"}).code == 2);
}

TEST_CASE("modform-compare") {
  CHECK(run({"modform-compare", "catalog:P_6_4", "--eta", "eta(2)^12"}).code == 0);
  CHECK(run({"modform-compare", "catalog:P_4_1", "--eta", "eta(2)^12"}).code == 1);
  CHECK(run({"modform-compare", "catalog:P_3_1_sq", "--eta", "eta(z)^4 eta(2z)^2 eta(4z)^4"}).code == 1);
  CHECK(run({"modform-compare", "catalog:P_3_1_sq", "--eta", "eta(z)^4 eta(2z)^2 eta(4z)^4", "--allow-negated"}).code ==
        0);
}

TEST_CASE("closed-form and catalog") {
  const Run w = run({"closed-form", "--family", "wheel:3", "--bound", "13"});
  CHECK(w.code == 0);
  CHECK(w.out.find("wheel:3") != std::string::npos);
  CHECK(run({"closed-form", "--expr", "P_1_1", "--completed", "--bound", "13"}).code == 0);
  CHECK(run({"closed-form", "--family", "octopus:2"}).code == 2);

  const Run c = run({"catalog", "--checksum"});
  CHECK(c.code == 0);
  CHECK(c.out.find(egp::load_catalog().checksum) != std::string::npos);
  CHECK(run({"catalog", "--show", "P_7_5"}).out.find("P_7_10") != std::string::npos);
  CHECK(run({"catalog", "--show", "P_0_0"}).code == 2);
}
