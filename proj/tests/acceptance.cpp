// Acceptance run: one line per criterion. Tolerances are exact throughout.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "egp/catalog.hpp"
#include "egp/graph_io.hpp"
#include "suites.hpp"

namespace {

// Every residue comparison is exact; these are the only tunables.
constexpr std::uint64_t kBound = 41;
constexpr std::uint64_t kSmallBound = 13;
constexpr std::uint64_t kCompletedBound = 43;
constexpr int kMaxLoops = 7;
constexpr std::size_t kRandomPairs = 10;
constexpr std::size_t kRandomTrees = 25;
constexpr std::uint64_t kSeed = 0x5eed2024;

struct Criterion {
  int number;
  const char* suite;
  const char* title;
  // Failures that are the criterion's own wording disagreeing with the data; any
  // other failure still fails the run.
  const char* documented_failure;
};

constexpr Criterion kCriteria[] = {
    {1, "appendix-a", "stored decompleted rows", nullptr},
    {2, "appendix-c", "completed-graph values", nullptr},
    {3, "closed-forms", "closed forms", nullptr},
    {4, "invariance", "invariance suites", nullptr},
    {5, "symmetry", "symmetry zeros",
     "P_7_10: predicate true but not listed"},
    {6, "vanishing", "composite-modulus vanishing", nullptr},
    {7, "pointcount", "point-count reconciliation", nullptr},
    {8, "modform", "modular forms", nullptr},
    {9, "equalities", "unexplained equalities", nullptr},
};

bool only_documented(const egp::suites::SuiteResult& r, const char* documented) {
  if (!documented || r.failures.empty()) return false;
  const std::string prefix = documented;
  for (const auto& f : r.failures)
    if (f.rfind(prefix, 0) != 0) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  egp::suites::SuiteOptions o;
  o.bound = kBound;
  o.small_bound = kSmallBound;
  o.completed_bound = kCompletedBound;
  o.max_loops = kMaxLoops;
  o.random_pairs = kRandomPairs;
  o.random_trees = kRandomTrees;
  o.seed = kSeed;
  const std::string regular_dir = argc > 1 ? argv[1] : EGP_TEST_DATA_DIR "/regular4";
  for (int k : {5, 6, 7, 8}) {
    for (int i = 0;; ++i) {
      const std::string path = regular_dir + "/regular4_" + std::to_string(k) + "_" + std::to_string(i) + ".txt";
      if (std::FILE* f = std::fopen(path.c_str(), "r")) {
        std::fclose(f);
        o.regular_graphs.push_back(egp::read_graph_file(path).graph);
      } else {
        break;
      }
    }
  }

  const egp::Catalog& cat = egp::load_catalog();
  int passed = 0, documented = 0, failed = 0;
  for (const auto& c : kCriteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = egp::suites::run_suite(c.suite, cat, o);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool known = !r.passed && only_documented(r, c.documented_failure);
    std::cout << "criterion " << c.number << " (" << c.title << "): " << (r.passed ? "PASS" : "FAIL") << "  "
              << r.summary() << "  [" << static_cast<int>(secs * 10) / 10.0 << " s]";
    if (known) std::cout << "  (documented discrepancy)";
    std::cout << "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 8; ++i) std::cout << "    failure: " << r.failures[i] << "\n";
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    if (r.passed) {
      ++passed;
    } else if (known) {
      ++documented;
    } else {
      ++failed;
    }
  }
  std::cout << passed << " pass, " << documented << " fail as documented, " << failed << " fail\n";
  return failed == 0 ? 0 : 1;
}
