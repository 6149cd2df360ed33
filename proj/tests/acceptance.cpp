// One line per acceptance criterion; exit status 1 when any line fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "sesqui/checks.hpp"

using namespace sesqui;

namespace {

// Wall-clock budgets, seconds.
constexpr double kFamilyBudget = 60;
constexpr double kGraphBudget = 300;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;
  double budget = 0;  // 0: none
};

const std::vector<Criterion> kCriteria{
    {1, "family counts", {"straight-family-counts", "up-family-counts", "down-family-counts"}, kFamilyBudget},
    {2, "0235 counts", {"straight-0235-counts", "up-0235-counts", "down-0235-counts"}},
    {3, "oracle equivalence", {"transducer-matches-trapezoids"}},
    {4,
     "structural predicates",
     {"straight-table-structure", "up-table-structure", "straight-0235-table-structure", "up-0235-table-structure"}},
    {5, "duality", {"families-closed-under-dual", "graphs-closed-under-dual"}},
    {6, "operator L", {"middle-left-digit-is-a-function", "operator-closure", "local-uniqueness"}},
    {7,
     "graphs",
     {"graph-two-regular", "graph-fold-pairs", "double-fold-drops-width", "graph-matches-correct-columns",
      "graph-matches-reverse", "smallest-fold-size"},
     kGraphBudget},
    {8,
     "automata",
     {"automaton-two-letters", "folded-automaton-minimal", "dfa-matches-union", "kernel-isomorphism",
      "kernel-depth-order"}},
    {9,
     "column determinism",
     {"leftmost-column-determinism", "zero-column-propagation", "triangle-bijection", "square-bijection"}},
    {10,
     "zero-one-two pairs, intervals, sweep, probes",
     {"small-alphabet-pair-snapshot", "digit-interval-endpoints", "sixth-shift-sweep", "probe-certificates"}},
};

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    std::vector<const Check*> checks;
    for (const auto& id : c.checks) checks.push_back(&find_check(id));
    auto start = std::chrono::steady_clock::now();
    auto outcomes = run_checks(checks, 1);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool pass = true;
    std::string detail;
    for (const auto& o : outcomes) {
      pass &= o.passed();
      if (!o.passed()) detail += "; " + o.check->id + ": " + (o.error.empty() ? o.result.summary : o.error);
    }
    if (c.budget > 0 && seconds > c.budget) {
      pass = false;
      detail += "; over budget of " + std::to_string(static_cast<int>(c.budget)) + "s";
    }
    failed += !pass;
    std::printf("criterion %2d %s  %s (%zu checks, %.1fs)%s\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(),
                outcomes.size(), seconds, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed ? 1 : 0;
}
