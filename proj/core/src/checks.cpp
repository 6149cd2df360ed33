#include "sesqui/checks.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "sesqui/automaton.hpp"
#include "sesqui/carry.hpp"
#include "sesqui/columns.hpp"
#include "sesqui/correct.hpp"
#include "sesqui/enumerate.hpp"
#include "sesqui/graph.hpp"
#include "sesqui/join.hpp"
#include "sesqui/parallel.hpp"
#include "sesqui/serialize.hpp"
#include "sesqui/tables.hpp"
#include "sesqui/zprobe.hpp"

namespace sesqui {

namespace {

// Values shared between checks, computed once per process.
template <class Key, class Value>
class Memo {
 public:
  template <class Make>
  const Value& get(const Key& k, Make&& make) {
    std::shared_future<Value> f;
    std::promise<Value> p;
    bool mine = false;
    {
      std::lock_guard lock(m_);
      auto it = map_.find(k);
      if (it == map_.end()) {
        f = p.get_future().share();
        map_.emplace(k, f);
        mine = true;
      } else {
        f = it->second;
      }
    }
    if (mine) {
      try {
        p.set_value(make());
      } catch (...) {
        p.set_exception(std::current_exception());
      }
    }
    return f.get();
  }

 private:
  std::mutex m_;
  std::map<Key, std::shared_future<Value>> map_;
};

const PairSet& family(int n, Shear s, bool z) {
  static Memo<std::tuple<int, Shear, bool>, PairSet> memo;
  return memo.get({n, s, z}, [&] { return z ? pair_family_0235(n, s) : pair_family(n, s); });
}

const TableFamilyReport& family_report(int n, Shear s, bool z) {
  static Memo<std::tuple<int, Shear, bool>, TableFamilyReport> memo;
  return memo.get({n, s, z}, [&] { return verify_family_structure(family(n, s, z), z); });
}

const Digraph& graph_G(int n) {
  static Memo<int, Digraph> memo;
  return memo.get(n, [&] { return graph_from_pairs(family(n, kSelectedShear, true)); });
}

const AutomatonSummary& automata(int n) {
  static Memo<int, AutomatonSummary> memo;
  return memo.get(n, [&] { return summarize_automata(n); });
}

const ColumnLemmaReport& column_lemmas(int n) {
  static Memo<int, ColumnLemmaReport> memo;
  return memo.get(n, [&] { return verify_column_lemmas(n, 6); });
}

int theta(int n) {
  static Memo<int, int> memo;
  return memo.get(n, [&] { return zero_word_depth(n); });
}

CheckResult make(bool passed, std::string summary, json data = json::object()) {
  return CheckResult{passed, std::move(summary), std::move(data)};
}

template <class T>
std::string joined(const std::vector<T>& xs, char sep = '/') {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? std::string(1, sep) : "") << xs[i];
  return s.str();
}

bool is_count_clause(std::string_view c) {
  return c == clause::kTableCount || c == clause::kRowCount || c == clause::kTableShape;
}

// Table and row counts of a family for n = 2..5.
CheckResult family_counts(Shear s, bool z) {
  bool ok = true;
  json rows = json::array();
  std::vector<std::size_t> tables, expected_tables, distinct, expected_rows;
  for (int n = 2; n <= 5; ++n) {
    const auto& r = family_report(n, s, z);
    bool good = std::none_of(r.violations.begin(), r.violations.end(),
                             [](const Violation& v) { return is_count_clause(v.clause); });
    ok &= good;
    tables.push_back(r.table_count);
    expected_tables.push_back(r.expected_tables);
    distinct.push_back(r.row_count);
    expected_rows.push_back(r.expected_rows);
    json shapes = json::array();
    for (const auto& [shape, count] : r.class_histogram)
      shapes.push_back(std::to_string(count) + "x(" + std::to_string(shape.first) + "|" +
                       std::to_string(shape.second) + ")");
    rows.push_back(json{{"n", n},
                        {"pairs", r.pair_count},
                        {"tables", r.table_count},
                        {"expected_tables", r.expected_tables},
                        {"rows", r.row_count},
                        {"expected_rows", r.expected_rows},
                        {"shapes", shapes},
                        {"ok", good}});
  }
  return make(ok,
              "tables " + joined(tables) + " (expected " + joined(expected_tables) + "), rows " + joined(distinct) +
                  " (expected " + joined(expected_rows) + ")",
              json{{"by_n", rows}, {"orientation", kShearOrientation}});
}

CheckResult family_structure(Shear s, bool z) {
  std::map<std::string, std::size_t> bad;
  json first = json::array();
  for (int n = 2; n <= 4; ++n)
    for (const auto& v : family_report(n, s, z).violations)
      if (!is_count_clause(v.clause) && bad[v.clause]++ == 0) first.push_back(json{{"n", n}, {"violation", v}});
  std::size_t total = 0;
  for (const auto& [c, k] : bad) total += k;
  return make(bad.empty(), std::to_string(total) + " violations for n=2..4", json{{"by_clause", bad}, {"first", first}});
}

CheckResult oracle_equality() {
  const std::vector<std::pair<int, int>> shapes{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}};
  bool ok = true;
  json rows = json::array();
  for (auto [n, m] : shapes) {
    auto a = enumerate_windows(n, m, Shear::Straight);
    auto b = oracle_windows(n, m);
    ok &= a == b;
    rows.push_back(json{{"shape", std::to_string(n) + "x" + std::to_string(m)},
                        {"transducer", a.size()},
                        {"oracle", b.size()},
                        {"equal", a == b}});
  }
  return make(ok, ok ? "6 shapes equal" : "set mismatch", json{{"shapes", rows}});
}

CheckResult family_duality() {
  std::size_t checked = 0;
  json bad = json::array();
  for (Shear s : {Shear::Straight, Shear::Up, Shear::Down})
    for (bool z : {false, true})
      for (int n = 2; n <= 5; ++n) {
        const auto& p = family(n, s, z);
        ++checked;
        if (dual(p) != p) bad.push_back(json{{"shear", to_string(s)}, {"n", n}, {"rightmost_0235", z}});
      }
  const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  for (Shear s : {Shear::Straight, Shear::Up, Shear::Down})
    for (auto [n, m] : shapes) {
      auto ws = enumerate_windows(n, m, s);
      std::vector<Window> ds;
      for (const auto& w : ws) ds.push_back(dual(w));
      sort_unique(ds);
      ++checked;
      if (ds != ws) bad.push_back(json{{"shear", to_string(s)}, {"window", std::to_string(n) + "x" + std::to_string(m)}});
    }
  return make(bad.empty(), std::to_string(checked) + " sets, " + std::to_string(bad.size()) + " not closed",
              json{{"not_closed", bad}});
}

CheckResult graph_duality() {
  json bad = json::array();
  for (int n = 2; n <= 5; ++n) {
    if (!dual_automorphism(graph_G(n))) bad.push_back("G" + std::to_string(n));
    if (!dual_automorphism(build_Gamma(n))) bad.push_back("Gamma" + std::to_string(n));
  }
  return make(bad.empty(), bad.empty() ? "G_n and Gamma_n for n=2..5" : "relabeling breaks edges",
              json{{"failing", bad}});
}

CheckResult operator_function() {
  int defined = 0, multi = 0;
  for (Digit a = 0; a < 6; ++a)
    for (Digit b = 0; b < 6; ++b)
      for (Digit c = 0; c < 6; ++c) {
        int w = L_witnesses(a, b, c);
        defined += w > 0;
        multi += w > 1;
      }
  return make(multi == 0, std::to_string(defined) + " of 216 triples defined, " + std::to_string(multi) + " multivalued",
              json{{"defined", defined}, {"multivalued", multi}});
}

CheckResult operator_closure() {
  std::size_t bad = closure_failures(3, 7);
  return make(bad == 0, std::to_string(bad) + " correct words of length 3..7 with an incorrect image",
              json{{"failures", bad}});
}

CheckResult local_uniqueness() {
  auto r = verify_local_uniqueness();
  return make(r.ok(),
              "conflicts: right column " + std::to_string(r.right_column_conflicts) + ", bottom row " +
                  std::to_string(r.bottom_row_conflicts) + ", top row " + std::to_string(r.top_row_conflicts),
              json{{"right_column", r.right_column_conflicts},
                   {"bottom_row", r.bottom_row_conflicts},
                   {"top_row", r.top_row_conflicts}});
}

// Words of the given length read by some path of the automaton.
std::vector<Word> accepted_words(const PartialAutomaton& a, int length, Alphabet alphabet) {
  std::vector<Word> out;
  Word w;
  auto go = [&](auto&& self, const std::vector<int>& states) -> void {
    if (static_cast<int>(w.size()) == length) {
      out.push_back(w);
      return;
    }
    for (Digit d = 0; d < 6; ++d) {
      if (!allows(alphabet, d)) continue;
      std::vector<int> next;
      for (int s : states)
        if (int t = a.delta[static_cast<std::size_t>(s)][d]; t != kNoState) next.push_back(t);
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      w.push_back(d);
      self(self, next);
      w.pop_back();
    }
  };
  std::vector<int> all(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) all[s] = static_cast<int>(s);
  go(go, all);
  return out;
}

CheckResult correct_automata() {
  json rows = json::array();
  bool ok = true;
  for (Alphabet al : {kAllDigits, k0235})
    for (Reading rd : {Reading::TopDown, Reading::BottomUp}) {
      auto a = build_correct_dfa(al, rd);
      bool good = true;
      for (int len = 1; len <= 8 && good; ++len) good = accepted_words(a, len, al) == correct_words(len, al, rd);
      ok &= good;
      rows.push_back(json{{"alphabet", alphabet_string(al)},
                          {"reading", rd == Reading::TopDown ? "top-down" : "bottom-up"},
                          {"states", a.size()},
                          {"equal", good}});
    }
  return make(ok, ok ? "4 automata equal the correct words up to length 8" : "language mismatch", json{{"automata", rows}});
}

CheckResult column_lemma_literal() {
  std::vector<std::size_t> counts;
  json first = json::array();
  for (int n = 2; n <= 4; ++n) {
    const auto& r = column_lemmas(n);
    counts.push_back(r.count(column_clause::kRightCorrect));
    for (const auto& v : r.examples)
      if (v.clause == column_clause::kRightCorrect) first.push_back(json{{"n", n}, {"violation", v}});
  }
  bool ok = std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c == 0; });
  return make(ok, "incorrect right columns " + joined(counts) + " for n=2..4", json{{"first", first}});
}

CheckResult column_lemma_rest() {
  std::map<std::string, std::size_t> bad;
  std::size_t stacks = 0, words = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto& r = column_lemmas(n);
    stacks += r.stacks_checked;
    words += r.words_checked;
    for (const auto& [c, k] : r.failures)
      if (c != column_clause::kRightCorrect) bad[c] += k;
  }
  return make(bad.empty(), std::to_string(stacks) + " stacks, " + std::to_string(words) + " words",
              json{{"failures", bad}});
}

CheckResult graph_regular() {
  std::vector<std::size_t> sizes;
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    sizes.push_back(graph_G(n).size());
    ok &= graph_G(n).regular(2);
  }
  return make(ok, "vertices " + joined(sizes), json{{"vertices", sizes}});
}

CheckResult fold_pairing() {
  std::vector<std::size_t> sizes;
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    auto f = fold(graph_G(n));
    sizes.push_back(f.quotient.size());
    ok &= 2 * f.quotient.size() == graph_G(n).size();
  }
  return make(ok, "folded vertices " + joined(sizes), json{{"folded_vertices", sizes}});
}

CheckResult double_fold() {
  bool ok = true;
  json rows = json::array();
  for (int n = 3; n <= 5; ++n) {
    auto twice = fold(fold(graph_G(n)).quotient).quotient;
    auto m = iso(twice, graph_G(n - 1));
    bool good = m && is_isomorphism(twice, graph_G(n - 1), *m);
    ok &= good;
    json row{{"n", n}, {"isomorphic", good}};
    if (good && n == 3) row["map"] = labeled_map(twice, graph_G(n - 1), *m);
    rows.push_back(std::move(row));
  }
  return make(ok, ok ? "n=3..5 isomorphic" : "no isomorphism", json{{"by_n", rows}});
}

CheckResult graph_vs_columns() {
  bool ok = true;
  json rows = json::array();
  for (int n = 2; n <= 5; ++n) {
    auto gamma = build_Gamma(n);
    auto m = iso(graph_G(n), gamma);
    bool good = m && is_isomorphism(graph_G(n), gamma, *m);
    ok &= good;
    json row{{"n", n}, {"isomorphic", good}};
    if (good && n == 2) row["map"] = labeled_map(graph_G(n), gamma, *m);
    rows.push_back(std::move(row));
  }
  return make(ok, ok ? "n=2..5 isomorphic" : "no isomorphism", json{{"by_n", rows}});
}

CheckResult graph_reverse() {
  bool ok = true;
  json rows = json::array();
  for (int n = 2; n <= 5; ++n) {
    auto rev = graph_G(n).reversed();
    auto m = iso(graph_G(n), rev);
    bool good = m && is_isomorphism(graph_G(n), rev, *m);
    ok &= good;
    json row{{"n", n}, {"isomorphic", good}};
    if (good && n == 2) row["map"] = labeled_map(graph_G(n), rev, *m);
    rows.push_back(std::move(row));
  }
  return make(ok, ok ? "n=2..5 isomorphic" : "no isomorphism", json{{"by_n", rows}});
}

CheckResult small_fold_size() {
  auto f = fold(graph_G(2));
  return make(f.quotient.size() == 8, std::to_string(f.quotient.size()) + " vertices",
              json{{"vertices", f.quotient.size()}, {"fold", f}});
}

CheckResult automaton_letters() {
  bool ok = true;
  std::vector<std::size_t> sizes;
  for (int n = 2; n <= 5; ++n) {
    auto a = automaton_from_graph(graph_G(n));
    sizes.push_back(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) ok &= a.letters_at(s) == 2;
  }
  return make(ok, "states " + joined(sizes) + ", two letters each", json{{"states", sizes}});
}

CheckResult folded_languages() {
  bool ok = true;
  json rows = json::array();
  for (int n = 2; n <= 4; ++n) {
    auto f = fold_A(automaton_from_graph(graph_G(n)));
    auto p = language_partition(f);
    std::size_t classes = std::set<int>(p.begin(), p.end()).size();
    ok &= classes == f.size();
    rows.push_back(json{{"n", n}, {"states", f.size()}, {"classes", classes}});
  }
  return make(ok, ok ? "all states distinct for n=2..4" : "equal languages found", json{{"by_n", rows}});
}

// Prefix-closed languages: walk the words accepted by either side.
CheckResult dfa_union() {
  bool ok = true;
  json rows = json::array();
  for (int n = 2; n <= 4; ++n) {
    auto a = automaton_from_graph(graph_G(n));
    auto d = determinize_minimize(a);
    std::size_t words = 0, mismatches = 0;
    std::vector<int> all(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) all[s] = static_cast<int>(s);
    auto go = [&](auto&& self, int q, const std::vector<int>& states, int len) -> void {
      ++words;
      if ((q != kNoState) != !states.empty()) {
        ++mismatches;
        return;
      }
      if (len == 8 || q == kNoState) return;
      for (Digit x = 0; x < 6; ++x) {
        std::vector<int> next;
        for (int s : states)
          if (int t = a.delta[static_cast<std::size_t>(s)][x]; t != kNoState) next.push_back(t);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        int qn = d.delta[static_cast<std::size_t>(q)][x];
        if (qn == kNoState && next.empty()) continue;
        self(self, qn, next, len + 1);
      }
    };
    go(go, d.initial, all, 0);
    ok &= mismatches == 0;
    rows.push_back(json{{"n", n}, {"dfa_states", d.size()}, {"accepted_words", words}, {"mismatches", mismatches}});
  }
  return make(ok, ok ? "equal on all words up to length 8, n=2..4" : "language mismatch", json{{"by_n", rows}});
}

CheckResult kernel_resolution() {
  bool ok = true;
  std::vector<std::string> matches;
  json rows = json::array();
  for (int n = 2; n <= 5; ++n) {
    const auto& s = automata(n);
    ok &= s.kernel_match != KernelMatch::Neither;
    matches.emplace_back(to_string(s.kernel_match));
    rows.push_back(s);
  }
  return make(ok, "kernel isomorphic to: " + joined(matches, ','), json{{"by_n", rows}});
}

CheckResult kernel_depths() {
  bool ok = true;
  std::vector<int> etas, thetas;
  for (int n = 2; n <= 5; ++n) {
    const auto& s = automata(n);
    ok &= s.theta >= 0 && s.eta >= 0 && s.theta <= s.eta;
    etas.push_back(s.eta);
    thetas.push_back(s.theta);
  }
  return make(ok, "eta " + joined(etas) + ", theta " + joined(thetas), json{{"eta", etas}, {"theta", thetas}});
}

CheckResult column_determinism(bool kernel_only) {
  bool ok = true;
  json rows = json::array();
  std::vector<std::size_t> ambiguous;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      auto r = kernel_only ? kernel_column_determinism(n, m) : leftmost_column_determinism(n, m);
      ok &= r.ok();
      ambiguous.push_back(r.ambiguous_columns);
      rows.push_back(json{{"n", n}, {"rows", m}, {"stacks", r.stacks}, {"columns", r.columns},
                          {"ambiguous", r.ambiguous_columns}});
    }
  return make(ok, "ambiguous columns by (n,rows): " + joined(ambiguous, ','), json{{"cases", rows}});
}

CheckResult zero_column_at_previous_depth() {
  bool ok = true;
  json rows = json::array();
  std::vector<std::string> parts;
  for (int n = 2; n <= 3; ++n) {
    int rows_n = theta(n - 1) + 1;
    auto r = zero_column_propagation(n, rows_n);
    ok &= r.ok();
    parts.push_back("n=" + std::to_string(n) + ": " + std::to_string(r.nonzero_stacks) + " of " +
                    std::to_string(r.zero_column_stacks));
    rows.push_back(r);
  }
  return make(ok, "nonzero stacks with a zero column " + joined(parts, ','), json{{"by_n", rows}});
}

CheckResult zero_column_minimal_height() {
  bool ok = true;
  std::vector<int> minimal, thetas;
  for (int n = 2; n <= 4; ++n) {
    auto r = zero_column_propagation(n, 1);
    minimal.push_back(r.minimal_rows);
    thetas.push_back(theta(n));
    ok &= r.minimal_rows == theta(n);
  }
  return make(ok, "minimal rows " + joined(minimal) + ", theta " + joined(thetas),
              json{{"minimal_rows", minimal}, {"theta", thetas}});
}

CheckResult bijections(bool triangle, bool short_square) {
  bool ok = true;
  json rows = json::array();
  std::vector<std::size_t> images;
  for (int k = 1; k <= 5; ++k) {
    auto r = triangle ? triangle_bijection(k) : square_bijection(k, short_square ? k + 1 : 0);
    ok &= r.ok();
    images.push_back(r.image);
    rows.push_back(r);
  }
  return make(ok, "images " + joined(images) + " for sizes 1..5", json{{"by_size", rows}});
}

CheckResult small_alphabet_snapshot() {
  // Unique-bottom tables of the vertically non-dead-end {0,1,2} pairs.
  static const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> expected{
      {{"00", "20"}, {"00"}},
      {{"00", "01", "20", "21"}, {"01"}},
      {{"01", "21"}, {"32"}},
      {{"32"}, {"20", "21"}},
  };
  auto pairs = nondeadend_012_pairs();
  auto tables = factor_h(pairs, Unique::Bottom);
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> got;
  for (const auto& t : tables) {
    std::vector<std::string> tops, bottoms;
    for (const auto& r : t.tops) tops.push_back(row_string(r));
    for (const auto& r : t.bottoms) bottoms.push_back(row_string(r));
    std::sort(tops.begin(), tops.end());
    std::sort(bottoms.begin(), bottoms.end());
    got.emplace_back(tops, bottoms);
  }
  auto want = expected;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  bool stable = nondeadend(pairs, Axis::Vertical) == pairs;
  bool ok = pairs.size() == 10 && got == want && stable;
  return make(ok, std::to_string(pairs.size()) + " pairs in " + std::to_string(tables.size()) + " tables",
              json{{"pairs", pairs.size()}, {"tables", tables}, {"stable_under_pruning", stable}});
}

CheckResult digit_endpoints() {
  std::size_t bad = 0, points = 0;
  const Rational eps(1, 1000000);
  for (int k = 0; k < 6; ++k) {
    Rational at(k, 6);
    std::vector<std::pair<Rational, int>> cases{{at, k}, {at + eps, k}};
    if (k > 0) cases.emplace_back(at - eps, k - 1);
    cases.emplace_back(Rational(k + 1, 6) - eps, k);
    for (const auto& [x, digit] : cases) {
      ++points;
      bool good = digit_interval(x) == digit && in_lower_half(x) == (digit <= 2) &&
                  in_sixth_target(x) == (digit == 0 || digit == 2 || digit == 3) &&
                  in_lower_half(x) == (x < Rational(1, 2)) &&
                  in_sixth_target(x) == (x < Rational(1, 6) || (x >= Rational(1, 3) && x < Rational(2, 3)));
      bad += !good;
    }
  }
  return make(bad == 0, std::to_string(points) + " points, " + std::to_string(bad) + " disagreements",
              json{{"points", points}, {"disagreements", bad}});
}

CheckResult sixth_shift() {
  auto xs = sample_xi(10000, 40, 1);
  auto r = verify_sixth_shift(xs, 40);
  return make(r.ok() && r.checked > 0,
              std::to_string(r.checked) + " checked, " + std::to_string(r.vacuous) + " vacuous, " +
                  std::to_string(r.counterexamples.size()) + " counterexamples",
              json{{"seed", 1}, {"horizon", 40}, {"report", r}});
}

struct ProbeCase {
  std::vector<std::string> constraints;
  int width;
  std::optional<int> origin;
};

CheckResult probe_certificates() {
  const std::vector<ProbeCase> cases{
      {{}, 1, std::nullopt},
      {{}, 2, std::nullopt},
      {{"0:02", "0:12345"}, 1, std::nullopt},
      {{"-1:012"}, 2, std::nullopt},
      {{"-1:012"}, 3, std::nullopt},
      {{"-1:023"}, 1, std::nullopt},
      {{"-1:023"}, 2, std::nullopt},
      {{"-1:023"}, 3, std::nullopt},
      {{"-1:023"}, 4, std::nullopt},
      {{"-1:012", "0:15"}, 2, std::nullopt},
      {{"-1:012", "0:15"}, 3, std::nullopt},
      {{"0:023", "1:45"}, 2, 0},
      {{"0:35"}, 2, std::nullopt},
  };
  bool ok = true;
  std::size_t empty = 0;
  json rows = json::array();
  for (const auto& c : cases) {
    std::vector<ColumnConstraint> cs;
    for (const auto& t : c.constraints) cs.push_back(parse_constraint(t));
    auto r = emptiness_probe(cs, 8, c.width, c.origin);
    auto v = verify_certificate(r);
    ok &= v.ok();
    empty += r.verdict == Verdict::Empty;
    rows.push_back(json{{"constraints", c.constraints},
                        {"width", c.width},
                        {"verdict", to_string(r.verdict)},
                        {"depth", r.depth},
                        {"trace", r.trace},
                        {"certificate", v}});
  }
  return make(ok,
              std::to_string(cases.size()) + " probes (" + std::to_string(empty) + " empty), all certificates " +
                  (ok ? "re-verified" : "NOT re-verified"),
              json{{"probes", rows}});
}

CheckResult carry_recurrence() {
  auto r = recurrent_carry_states();
  return make(r.size() == kCarryStates, std::to_string(r.size()) + " of 6 carry states recurrent");
}

Rational row_value(const Row& row) {
  Rational v = 0;
  Rational unit = 1;
  for (int k = 0; k < row.offset; ++k) unit *= 6;
  for (int k = 0; k > row.offset; --k) unit /= 6;
  for (Digit d : row.digits) {
    v += unit * d;
    unit *= 6;
  }
  return v;
}

CheckResult row_multiplication() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> digit(0, 5), length(1, 24), offset(-8, 0);
  std::size_t bad = 0;
  const std::size_t trials = 2000;
  for (std::size_t t = 0; t < trials; ++t) {
    Row r;
    r.digits.resize(static_cast<std::size_t>(length(rng)));
    for (auto& d : r.digits) d = static_cast<Digit>(digit(rng));
    r.offset = offset(rng);
    bad += row_value(mul_row_3_2(r)) != row_value(r) * Rational(3, 2);
  }
  return make(bad == 0, std::to_string(trials) + " random rows, " + std::to_string(bad) + " wrong products");
}

std::vector<Check> build_registry() {
  using S = Shear;
  std::vector<Check> r;
  auto add = [&](std::string id, std::string group, std::string topic, std::string params,
                 std::function<CheckResult()> run) {
    r.push_back(Check{std::move(id), std::move(group), std::move(topic), std::move(params), std::move(run)});
  };
  add("carry-states-recurrent", "carry", "every carry state lies on a cycle of the transducer", "6 states",
      carry_recurrence);
  add("row-times-three-halves", "carry", "row multiplication agrees with exact rationals", "2000 rows, seed 7",
      row_multiplication);

  add("straight-family-counts", "families", "straight pairs: 3*6^(n-1) unique-bottom tables, 6^n rows", "n=2..5",
      [] { return family_counts(S::Straight, false); });
  add("up-family-counts", "families", "up-sheared pairs: 3*4^(n-1) tables, 6*4^(n-1) rows", "n=2..5",
      [] { return family_counts(S::Up, false); });
  add("down-family-counts", "families", "down-sheared pairs: 3*4^(n-1) tables, 6*4^(n-1) rows", "n=2..5",
      [] { return family_counts(S::Down, false); });

  add("straight-0235-counts", "tables-0235", "straight 0235 pairs: 2*6^(n-1) tables, 4*6^(n-1) rows", "n=2..5",
      [] { return family_counts(S::Straight, true); });
  add("up-0235-counts", "tables-0235", "up-sheared 0235 pairs: 2*4^(n-1) tables, 4^n rows", "n=2..5",
      [] { return family_counts(S::Up, true); });
  add("down-0235-counts", "tables-0235", "down-sheared 0235 pairs: 2*4^(n-1) tables, 4^n rows", "n=2..5",
      [] { return family_counts(S::Down, true); });

  add("transducer-matches-trapezoids", "oracle", "transducer windows equal the trapezoid oracle",
      "2x2 2x3 2x4 3x2 3x3 4x2", oracle_equality);

  add("straight-table-structure", "structure", "digit classes and leftmost-only differences in straight tables",
      "n=2..4", [] { return family_structure(S::Straight, false); });
  add("up-table-structure", "structure", "digit classes, differing tops and partners in up-sheared tables", "n=2..4",
      [] { return family_structure(S::Up, false); });
  add("straight-0235-table-structure", "structure", "pairing and leftmost-only differences in straight 0235 tables",
      "n=2..4", [] { return family_structure(S::Straight, true); });
  add("up-0235-table-structure", "structure", "pairing, column classes and bottom classes in up-sheared 0235 tables",
      "n=2..4", [] { return family_structure(S::Up, true); });

  add("families-closed-under-dual", "duality", "x -> 5-x maps every family and window set onto itself",
      "3 shears, n=2..5, windows up to 4x2", family_duality);
  add("graphs-closed-under-dual", "duality", "x -> 5-x is an automorphism of G_n and Gamma_n", "n=2..5",
      graph_duality);

  add("middle-left-digit-is-a-function", "operator", "each right column has at most one middle-left digit",
      "216 triples", operator_function);
  add("operator-closure", "operator", "the image of a correct word is correct", "lengths 3..7", operator_closure);
  add("local-uniqueness", "operator", "3x2 and 2x3 windows are fixed by a side and the opposite middle cell",
      "windows(3,2), windows(2,3)", local_uniqueness);
  add("correct-automata-match-words", "operator", "correct-word automata accept exactly the correct words",
      "Z6 and 0235, both readings, lengths 1..8", correct_automata);

  add("stacked-right-columns-correct", "column-lemmas", "right columns of stacks of straight 2x2 pairs are correct",
      "n=2..4, depth 6", column_lemma_literal);
  add("column-lemmas-window-form", "column-lemmas",
      "window right columns correct, left among right, non-dead-end stacks, leftmost coverage", "n=2..4, depth 6",
      column_lemma_rest);

  add("graph-two-regular", "graphs", "G_n has two in-edges and two out-edges everywhere", "n=2..5", graph_regular);
  add("graph-fold-pairs", "graphs", "vertices of G_n pair up by equal successor sets", "n=2..5", fold_pairing);
  add("double-fold-drops-width", "graphs", "folding G_n twice gives G_(n-1)", "n=3..5", double_fold);
  add("graph-matches-correct-columns", "graphs", "G_n is isomorphic to the correct-column graph Gamma_n", "n=2..5",
      graph_vs_columns);
  add("graph-matches-reverse", "graphs", "G_n is isomorphic to its reverse", "n=2..5", graph_reverse);
  add("smallest-fold-size", "graphs", "the folded G_2 has 8 vertices", "n=2", small_fold_size);

  add("automaton-two-letters", "automata", "A_n is deterministic with two letters per state", "n=2..5",
      automaton_letters);
  add("folded-automaton-minimal", "automata", "states of the folded A_n have pairwise distinct languages", "n=2..4",
      folded_languages);
  add("dfa-matches-union", "automata", "the minimal automaton accepts the union of the state languages of A_n",
      "n=2..4, words up to length 8", dfa_union);
  add("kernel-isomorphism", "automata", "the kernel is isomorphic to A_n or its fold", "n=2..5", kernel_resolution);
  add("kernel-depth-order", "automata", "theta_n <= eta_n", "n=2..5", kernel_depths);

  add("leftmost-column-determinism", "columns", "equal leftmost columns imply equal stacks", "n=1..4, rows=1..4",
      [] { return column_determinism(false); });
  add("kernel-column-determinism", "columns", "equal leftmost columns leading into the kernel imply equal stacks",
      "n=1..4, rows=1..4", [] { return column_determinism(true); });
  add("zero-column-propagation", "columns", "a zero leftmost column of theta_(n-1)+1 rows forces a zero stack",
      "n=2..3", zero_column_at_previous_depth);
  add("zero-column-minimal-height", "columns", "the least height forcing zero stacks equals theta_n", "n=2..4",
      zero_column_minimal_height);
  add("triangle-bijection", "columns", "correct vertical sides correspond to rows of G_(k+1)", "k=1..5",
      [] { return bijections(true, false); });
  add("square-bijection", "columns", "top rows and right columns of (2k+1)-row stacks correspond", "k=1..5",
      [] { return bijections(false, false); });
  add("square-bijection-short-stacks", "columns", "top rows and right columns of (k+1)-row stacks correspond",
      "k=1..5", [] { return bijections(false, true); });

  add("small-alphabet-pair-snapshot", "probe", "non-dead-end {0,1,2} pairs keep their four-table shape",
      "straight 2x2", small_alphabet_snapshot);
  add("digit-interval-endpoints", "probe", "first digits agree with the half and sixth intervals at every endpoint",
      "multiples of 1/6", digit_endpoints);
  add("sixth-shift-sweep", "probe", "lower-half orbits of xi give target-interval orbits of xi/6",
      "10^4 samples, horizon 40, seed 1", sixth_shift);
  add("probe-certificates", "probe", "every emptiness probe certificate re-verifies independently",
      "13 probes, depth 8", probe_certificates);
  return r;
}

}  // namespace

const std::vector<Check>& check_registry() {
  static const std::vector<Check> registry = build_registry();
  return registry;
}

std::vector<std::string> check_groups() {
  std::vector<std::string> out;
  for (const auto& c : check_registry())
    if (std::find(out.begin(), out.end(), c.group) == out.end()) out.push_back(c.group);
  return out;
}

const Check& find_check(std::string_view id) {
  for (const auto& c : check_registry())
    if (c.id == id) return c;
  throw UnknownScope("unknown check: " + std::string(id));
}

std::vector<const Check*> select_checks(std::string_view scope) {
  std::vector<const Check*> out;
  for (const auto& c : check_registry())
    if (scope == "all" || c.group == scope || c.id == scope) out.push_back(&c);
  if (out.empty()) throw UnknownScope("unknown check or group: " + std::string(scope));
  return out;
}

std::vector<CheckOutcome> run_checks(const std::vector<const Check*>& checks, int jobs) {
  std::vector<CheckOutcome> out(checks.size());
  parallel_for(checks.size(), std::max(1, jobs), [&](std::size_t i) {
    out[i].check = checks[i];
    auto start = std::chrono::steady_clock::now();
    try {
      out[i].result = checks[i]->run();
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
    out[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  return out;
}

json to_report(const std::vector<CheckOutcome>& outcomes) {
  json checks = json::array();
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    failed += !o.passed();
    json c{{"id", o.check->id},
           {"group", o.check->group},
           {"topic", o.check->topic},
           {"parameters", o.check->parameters},
           {"passed", o.passed()},
           {"summary", o.result.summary},
           {"seconds", o.seconds},
           {"data", o.result.data}};
    if (!o.error.empty()) c["error"] = o.error;
    checks.push_back(std::move(c));
  }
  return json{{"checks", std::move(checks)}, {"total", outcomes.size()}, {"failed", failed}};
}

}  // namespace sesqui
