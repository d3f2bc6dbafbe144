#include "cli.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "egp/catalog.hpp"
#include "egp/closed_forms.hpp"
#include "egp/egp.hpp"
#include "egp/expr.hpp"
#include "egp/families.hpp"
#include "egp/gperm.hpp"
#include "egp/graph_io.hpp"
#include "egp/modform.hpp"
#include "egp/point_count.hpp"
#include "egp/ryser.hpp"
#include "suites.hpp"

namespace egp::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json residue_json(const std::optional<Residue>& r) { return r ? json(*r) : json(nullptr); }

OrientedGraph from_catalog(const std::string& rest, std::string* id) {
  std::string name = rest, which;
  if (auto colon = rest.find(':'); colon != std::string::npos) {
    name = rest.substr(0, colon);
    which = rest.substr(colon + 1);
  }
  const CatalogEntry& e = load_catalog().find(name);
  if (!e.completed) throw CatalogError("catalog entry " + e.name + " has no edge list (row data only)");
  if (id) *id = e.name + (which.empty() ? "" : ":" + which);
  if (which == "completed") return *e.completed;
  std::size_t v = 0;
  if (!which.empty()) {
    try {
      v = std::stoul(which);
    } catch (const std::exception&) {
      throw UsageError("bad decompletion vertex '" + which + "'");
    }
    if (v >= e.completed->vertex_count()) throw UsageError("decompletion vertex out of range");
  }
  return e.decompleted(v);
}

}  // namespace

OrientedGraph resolve_graph(const std::string& spec, std::string* id) {
  auto starts = [&](std::string_view pre) { return spec.rfind(pre, 0) == 0; };
  if (starts("file:")) {
    if (id) *id = spec.substr(5);
    return read_graph_file(spec.substr(5)).graph;
  }
  if (starts("catalog:")) return from_catalog(spec.substr(8), id);
  if (starts("family:")) {
    if (id) *id = spec.substr(7);
    return generate_family(spec.substr(7));
  }
  std::error_code ec;
  if (fs::is_regular_file(spec, ec)) {
    if (id) *id = spec;
    return read_graph_file(spec).graph;
  }
  return from_catalog(spec, id);
}

namespace {

void print_sequence(std::ostream& out, const EgpSequence& s, bool as_json) {
  if (as_json) {
    json j{{"graph", s.graph_id}, {"primes", json::array()}, {"residues", json::array()}, {"variate", json::array()},
           {"canonicalized", s.canonicalized},
           {"spec", {{"lcm", s.spec.lcm}, {"calV", s.spec.row_copies}, {"calE", s.spec.column_copies}}}};
    json absent = json::object();
    for (const auto& v : s.values) {
      j["primes"].push_back(v.prime);
      j["residues"].push_back(residue_json(v.residue));
      j["variate"].push_back(v.variate);
      if (!v.residue) absent[std::to_string(v.prime)] = v.absent_reason;
    }
    if (!absent.empty()) j["absent"] = absent;
    out << j.dump() << "\n";
    return;
  }
  out << "graph " << s.graph_id << "  L=" << s.spec.lcm << " calV=" << s.spec.row_copies
      << " calE=" << s.spec.column_copies << (s.canonicalized ? "  canonical" : "  raw") << "\n";
  out << std::setw(6) << "p" << std::setw(6) << "n" << std::setw(10) << "residue" << "\n";
  for (const auto& v : s.values) {
    out << std::setw(6) << v.prime << std::setw(6) << v.n << std::setw(10);
    if (v.residue) {
      out << *v.residue;
    } else {
      out << "-";
    }
    if (v.variate) out << " *";
    if (!v.residue) out << "  (" << v.absent_reason << ")";
    out << "\n";
  }
  out << "* variate prime: the residue changes sign with the orientation\n";
}

int cmd_table_a(std::ostream& out, std::uint64_t bound, int max_loops, unsigned threads, bool as_json) {
  const Catalog& cat = load_catalog();
  std::vector<std::uint64_t> primes;
  for (auto p : cat.primes)
    if (p <= bound) primes.push_back(p);
  std::size_t cells = 0, mismatches = 0;
  json rows = json::array();
  if (!as_json) {
    out << std::left << std::setw(12) << "graph" << std::right;
    for (auto p : primes) out << std::setw(7) << p;
    out << "\n";
  }
  for (const auto& e : cat.entries) {
    if (!e.row || e.loops > max_loops) continue;
    json jr{{"graph", e.name}, {"cells", json::array()}};
    if (!as_json) out << std::left << std::setw(12) << e.name << std::right;
    if (!e.completed) {
      jr["status"] = "row only";
      if (as_json) {
        rows.push_back(jr);
      } else {
        out << "  (stored row only, no edge list)\n";
      }
      continue;
    }
    const EgpSequence s = suites::canonical_egp(e.decompleted(0), bound, Algorithm::automatic, threads, e.name);
    for (auto p : primes) {
      const auto stored = *e.row_value(cat.primes, p);
      const EgpValue* v = s.at_prime(p);
      const bool ok = v && v->residue && *v->residue == stored;
      ++cells;
      if (!ok) ++mismatches;
      jr["cells"].push_back({{"p", p}, {"computed", v ? residue_json(v->residue) : json(nullptr)},
                             {"stored", stored}, {"match", ok}});
      if (!as_json) {
        std::string c = std::to_string(stored);
        if (!ok) c = (v && v->residue ? std::to_string(*v->residue) : std::string("-")) + "!=" + c;
        out << std::setw(7) << c;
      }
    }
    if (as_json) {
      rows.push_back(jr);
    } else {
      out << "\n";
    }
  }
  if (as_json) {
    out << json{{"appendix", "A"}, {"bound", bound}, {"rows", rows}, {"cells", cells}, {"mismatches", mismatches}}.dump()
        << "\n";
  } else {
    out << cells - mismatches << "/" << cells << " cells match\n";
  }
  return mismatches == 0 ? 0 : 1;
}

int cmd_table_c(std::ostream& out, std::uint64_t bound, bool as_json) {
  const Catalog& cat = load_catalog();
  std::size_t cells = 0, mismatches = 0;
  json rows = json::array();
  for (const auto& e : cat.entries) {
    if (!e.completed_row) continue;
    const BinomialSumExpr* x = cat.completed_expression(e);
    const BlockSpec spec = block_spec(*e.completed);
    json jr{{"graph", e.name}, {"cells", json::array()}};
    if (!as_json) out << "completed " << e.name << "\n" << std::setw(8) << "p" << std::setw(8) << "stored"
                      << std::setw(8) << "expr" << std::setw(8) << "gperm" << "\n";
    for (std::size_t i = 0; i < e.completed_row->primes.size(); ++i) {
      const std::uint64_t p = e.completed_row->primes[i];
      if (p > bound) continue;
      const Residue stored = e.completed_row->values[i];
      const bool variate = is_variate(spec, require_prime_index(spec, p));
      std::optional<Residue> ev, gp;
      if (x) ev = eval_expr(*x, p);
      std::string gp_note;
      try {
        gp = gperm_cofactor(*e.completed, p);
      } catch (const CapExceeded& ex) {
        gp_note = ex.what();
      }
      const bool ok = (!ev || equal_up_to_variate_sign(*ev, stored, p, variate)) &&
                      (!gp || equal_up_to_variate_sign(*gp, stored, p, variate));
      ++cells;
      if (!ok) ++mismatches;
      json jc{{"p", p}, {"stored", stored}, {"expression", residue_json(ev)}, {"gperm", residue_json(gp)},
              {"variate", variate}, {"match", ok}};
      if (!gp_note.empty()) jc["gperm_skipped"] = gp_note;
      jr["cells"].push_back(jc);
      if (!as_json) {
        out << std::setw(8) << p << std::setw(8) << stored << std::setw(8) << (ev ? std::to_string(*ev) : "-")
            << std::setw(8) << (gp ? std::to_string(*gp) : "-") << (variate ? " *" : "  ")
            << (ok ? "" : "  MISMATCH") << "\n";
      }
    }
    rows.push_back(jr);
  }
  if (as_json) {
    out << json{{"appendix", "C"}, {"bound", bound}, {"rows", rows}, {"cells", cells}, {"mismatches", mismatches}}.dump()
        << "\n";
  } else {
    out << cells - mismatches << "/" << cells << " cells match\n";
  }
  return mismatches == 0 ? 0 : 1;
}

std::vector<OrientedGraph> graphs_in(const std::string& dir) {
  std::vector<OrientedGraph> out;
  if (dir.empty()) return out;
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.is_regular_file()) files.push_back(f.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) out.push_back(read_graph_file(f.string()).graph);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended graph permanents: compute, tabulate and verify"};
  app.name("egp");
  app.require_subcommand(1);

  std::string graph_spec, algorithm = "auto", suite = "all", appendix, eta, csv, family, expr_name, show, regular_dir;
  std::uint64_t bound = 0, small_bound = 13, prime = 0;
  unsigned threads = 0;
  int max_loops = 7, special = -1;
  bool as_json = false, raw = false, allow_negated = false, list = false, checksum = false, completed_expr = false;

  auto* compute = app.add_subcommand("compute", "EGP sequence of one graph");
  compute->add_option("--graph,graph", graph_spec, "file:<path>, catalog:<name>[:<v>|:completed] or family:<desc>")
      ->required();
  compute->add_option("--bound", bound, "largest prime")->default_val(41);
  compute->add_option("--algorithm", algorithm, "direct|reduced|cofactor|auto")->default_val("auto");
  compute->add_option("--special", special, "override the special vertex");
  compute->add_option("--threads", threads);
  compute->add_flag("--json", as_json);
  compute->add_flag("--raw", raw, "keep the stored orientation's signs");

  auto* table = app.add_subcommand("table", "reproduce the stored tables cell by cell");
  table->add_option("--appendix", appendix, "A (decompleted rows) or C (completed graphs)")
      ->required()
      ->check(CLI::IsMember({"A", "C"}));
  table->add_option("--bound", bound, "largest prime (41 for A, 43 for C)");
  table->add_option("--max-loops", max_loops)->default_val(7);
  table->add_option("--threads", threads);
  table->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::vector<std::string> suite_choices = suites::suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite)->default_val("all")->check(CLI::IsMember(suite_choices));
  verify->add_option("--bound", bound, "long-range prime bound")->default_val(41);
  verify->add_option("--small-bound", small_bound, "bound for exhaustive checks")->default_val(13);
  verify->add_option("--regular-dir", regular_dir, "extra 4-regular graphs for decompletion invariance");
  verify->add_option("--threads", threads);
  verify->add_flag("--json", as_json);

  auto* pc = app.add_subcommand("pointcount", "point count of the permanent polynomial with reconciliation");
  pc->add_option("--graph,graph", graph_spec)->required();
  pc->add_option("-p,--prime", prime)->required();
  pc->add_option("--threads", threads);

  auto* mf = app.add_subcommand("modform-compare", "compare an EGP sequence with a modular form");
  mf->add_option("--graph,graph", graph_spec)->required();
  auto* eta_opt = mf->add_option("--eta", eta, "eta product, e.g. \"-1 * eta(4)^6\"");
  auto* csv_opt = mf->add_option("--csv", csv, "coefficients as n,a_n lines");
  eta_opt->excludes(csv_opt);
  mf->add_option("--bound", bound)->default_val(41);
  mf->add_option("--threads", threads);
  mf->add_flag("--allow-negated", allow_negated, "also accept the negated form");
  mf->add_flag("--json", as_json);

  auto* cf = app.add_subcommand("closed-form", "closed forms and catalog expressions");
  auto* fam_opt = cf->add_option("--family", family, "wheel:<w>, zigzag:<m> or tree:<...>");
  auto* expr_opt = cf->add_option("--expr", expr_name, "catalog entry whose expression to evaluate");
  fam_opt->excludes(expr_opt);
  cf->add_flag("--completed", completed_expr, "use the completed-graph expression");
  cf->add_option("--bound", bound)->default_val(41);
  cf->add_flag("--json", as_json);

  auto* cat_cmd = app.add_subcommand("catalog", "inspect the bundled catalog");
  cat_cmd->add_flag("--list", list);
  cat_cmd->add_option("--show", show, "print one entry");
  cat_cmd->add_flag("--checksum", checksum);
  cat_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) {
      std::string id;
      OrientedGraph g = resolve_graph(graph_spec, &id);
      if (special >= 0) g = g.with_special(static_cast<std::size_t>(special));
      EgpOptions o;
      o.algorithm = parse_algorithm(algorithm);
      o.threads = threads;
      o.graph_id = id;
      EgpSequence s = egp(g, bound, o);
      if (!raw) s = canonicalize_sign(std::move(s));
      print_sequence(out, s, as_json);
      return 0;
    }
    if (*table) {
      if (appendix == "A") return cmd_table_a(out, bound ? bound : 41, max_loops, threads, as_json);
      return cmd_table_c(out, bound ? bound : 43, as_json);
    }
    if (*verify) {
      suites::SuiteOptions so;
      so.bound = bound;
      so.small_bound = small_bound;
      so.threads = threads;
      so.regular_graphs = graphs_in(regular_dir);
      const Catalog& cat = load_catalog();
      bool ok = true;
      json results = json::array();
      for (const auto& name : suites::suite_names()) {
        if (suite != "all" && suite != name) continue;
        const auto r = suites::run_suite(name, cat, so);
        ok = ok && r.passed;
        if (as_json) {
          results.push_back({{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks},
                             {"failures", r.failures}, {"notes", r.notes}});
          continue;
        }
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.summary() << "\n";
        for (const auto& f : r.failures) out << "  failure: " << f << "\n";
        for (const auto& n : r.notes) out << "  note: " << n << "\n";
      }
      if (as_json) out << json{{"passed", ok}, {"suites", results}}.dump() << "\n";
      return ok ? 0 : 1;
    }
    if (*pc) {
      std::string id;
      const OrientedGraph g = resolve_graph(graph_spec, &id);
      const ReconcileReport r = reconcile(g, prime, threads);
      json j{{"graph", id},
             {"prime", r.prime},
             {"r", r.r},
             {"lcm", r.lcm},
             {"variate", r.variate},
             {"count", r.count ? json(*r.count) : json(nullptr)},
             {"count_mod_p", residue_json(r.count_mod_p)},
             {"coefficient", residue_json(r.coefficient)},
             {"gperm", r.gperm},
             {"r_factorial_power", r.r_factorial_power},
             {"signs",
              {{"count_sign", r.count_sign},
               {"expected_count_sign", r.expected_count_sign},
               {"stated_sign", r.stated_sign ? json(*r.stated_sign) : json(nullptr)},
               {"stated_relation_holds", r.stated_relation_holds ? json(*r.stated_relation_holds) : json(nullptr)},
               {"empirical_sign", r.empirical_sign},
               {"holds_up_to_sign", r.holds_up_to_sign}}},
             {"notes", r.notes}};
      if (r.coefficient_matches_gperm) j["coefficient_matches_gperm"] = *r.coefficient_matches_gperm;
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*mf) {
      if (eta.empty() && csv.empty()) throw UsageError("modform-compare needs --eta or --csv");
      std::string id;
      const OrientedGraph g = resolve_graph(graph_spec, &id);
      const CoeffSeries c = eta.empty() ? read_coefficient_csv(csv)
                                        : eta_expand(parse_eta_product(eta),
                                                     std::max<std::size_t>(kDefaultSeriesLength, bound + 1));
      const EgpSequence s = suites::canonical_egp(g, bound, Algorithm::automatic, threads, id);
      const ModformReport r = compare(s, c, allow_negated);
      if (as_json) {
        json cells = json::array();
        for (const auto& x : r.cells)
          cells.push_back({{"p", x.prime}, {"egp", residue_json(x.egp)}, {"form", x.form}, {"variate", x.variate},
                           {"match", x.match}});
        out << json{{"graph", id}, {"form", c.source}, {"orientation", r.orientation},
                    {"overall_sign", r.overall_sign}, {"compared", r.compared}, {"matched", r.matched},
                    {"all_match", r.all_match}, {"verdict", r.verdict}, {"cells", cells}}
                   .dump()
            << "\n";
      } else {
        out << id << " vs " << c.source << ": " << r.verdict << "\n";
        out << std::setw(6) << "p" << std::setw(8) << "egp" << std::setw(8) << "a_p" << "\n";
        for (const auto& x : r.cells)
          out << std::setw(6) << x.prime << std::setw(8) << (x.egp ? std::to_string(*x.egp) : "-") << std::setw(8)
              << x.form << (x.variate ? " *" : "  ") << (x.match ? "" : "  differs") << "\n";
      }
      return r.all_match ? 0 : 1;
    }
    if (*cf) {
      json cells = json::array();
      std::string title;
      if (!family.empty()) {
        const OrientedGraph g = generate_family(family);
        const BlockSpec spec = block_spec(g);
        const auto colon = family.find(':');
        const std::string kind = family.substr(0, colon);
        const std::uint64_t param = colon == std::string::npos ? 0 : std::stoull(family.substr(colon + 1));
        title = family;
        for (auto p : admissible_primes(spec, bound)) {
          Residue v;
          if (kind == "wheel") {
            v = closed_form_wheel(param, p);
          } else if (kind == "zigzag") {
            v = closed_form_zigzag(param, p);
          } else if (kind == "tree") {
            v = closed_form_tree(g.vertex_count(), p);
          } else {
            throw UsageError("no closed form for family '" + kind + "'");
          }
          cells.push_back({{"p", p}, {"value", v}, {"variate", is_variate(spec, require_prime_index(spec, p))}});
        }
      } else if (!expr_name.empty()) {
        const Catalog& cat = load_catalog();
        const CatalogEntry& e = cat.find(expr_name);
        const BinomialSumExpr* x = completed_expr ? cat.completed_expression(e) : cat.decompleted_expression(e);
        if (!x) throw UsageError("catalog entry " + e.name + " has no such expression");
        title = x->id + (completed_expr ? " (completed)" : "");
        for (std::uint64_t p = 2; p <= bound; ++p) {
          if (!is_prime(p) || !expr_index(*x, p) || *expr_index(*x, p) < 0) continue;
          cells.push_back({{"p", p}, {"value", eval_expr(*x, p)}});
        }
      } else {
        throw UsageError("closed-form needs --family or --expr");
      }
      if (as_json) {
        out << json{{"source", title}, {"values", cells}}.dump() << "\n";
      } else {
        out << title << "\n";
        for (const auto& c : cells)
          out << std::setw(6) << c["p"].get<std::uint64_t>() << std::setw(8) << c["value"].get<Residue>()
              << (c.value("variate", false) ? " *" : "") << "\n";
      }
      return 0;
    }
    if (*cat_cmd) {
      const Catalog& cat = load_catalog();
      if (checksum) out << cat.checksum << "\n";
      if (list) {
        for (const auto& e : cat.entries) {
          out << std::left << std::setw(12) << e.name << std::setw(16) << e.display << std::right << " loops "
              << e.loops << (e.completed ? "" : "  edges absent") << (e.row ? "" : "  no row");
          for (const auto& r : e.relations) out << "  " << r.kind << "->" << r.with;
          out << "\n";
        }
      }
      if (!show.empty()) {
        const CatalogEntry& e = cat.find(show);
        if (as_json) {
          json j{{"name", e.name}, {"display", e.display}, {"loops", e.loops}, {"aliases", e.aliases},
                 {"row", e.row ? json(*e.row) : json(nullptr)}, {"symmetry_zeros", e.symmetry_zeros}};
          if (e.completed) {
            json edges = json::array();
            for (const auto& ed : e.completed->edges()) edges.push_back({ed.tail, ed.head});
            j["vertices"] = e.completed->vertex_count();
            j["edges"] = edges;
          }
          json rel = json::array();
          for (const auto& r : e.relations) rel.push_back({{"kind", r.kind}, {"with", r.with}});
          j["relations"] = rel;
          out << j.dump() << "\n";
        } else {
          out << e.name << " (" << e.display << "), " << e.loops << " loops\n";
          if (!e.aliases.empty()) {
            out << "aliases:";
            for (const auto& a : e.aliases) out << " " << a;
            out << "\n";
          }
          if (e.row) {
            out << "row:";
            for (std::size_t i = 0; i < cat.primes.size(); ++i) out << " " << cat.primes[i] << ":" << (*e.row)[i];
            out << "\n";
          }
          for (const auto& r : e.relations) out << r.kind << " -> " << r.with << "\n";
          if (e.expression) out << "expression " << *e.expression << "\n";
          if (e.completed) out << "completed graph:\n" << serialize_graph(*e.completed);
        }
      }
      if (!checksum && !list && show.empty()) out << cat.entries.size() << " entries, checksum " << cat.checksum << "\n";
      return 0;
    }
  } catch (const CapExceeded& e) {
    err << "egp: cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "egp: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace egp::cli
