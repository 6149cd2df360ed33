#include "sesqui/correct.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "sesqui/join.hpp"

namespace sesqui {

namespace {

struct LTable {
  std::array<std::set<Digit>, 216> middle;

  LTable() {
    for (const auto& w : enumerate_windows(3, 2, Shear::Straight)) middle[index(w.at(0, 0), w.at(1, 0), w.at(2, 0))].insert(w.at(1, 1));
  }
  static std::size_t index(Digit a, Digit b, Digit c) { return static_cast<std::size_t>(a * 36 + b * 6 + c); }
};

const LTable& l_table() {
  static const LTable t;
  return t;
}

bool triple_defined(Digit a, Digit b, Digit c) { return !l_table().middle[LTable::index(a, b, c)].empty(); }

// Factors of defined triples, for the short-word rule.
const std::set<Word>& short_correct() {
  static const std::set<Word> s = [] {
    std::set<Word> out{Word{}};
    for (Digit a = 0; a < 6; ++a)
      for (Digit b = 0; b < 6; ++b)
        for (Digit c = 0; c < 6; ++c)
          if (triple_defined(a, b, c)) {
            out.insert({a});
            out.insert({b});
            out.insert({c});
            out.insert({a, b});
            out.insert({b, c});
          }
    return out;
  }();
  return s;
}

// Triple check in reading order.
bool triple_ok(Digit r1, Digit r2, Digit r3, Reading reading) {
  return reading == Reading::TopDown ? triple_defined(r1, r2, r3) : triple_defined(r3, r2, r1);
}

bool short_ok(const Word& w, Reading reading) {
  if (reading == Reading::TopDown) return short_correct().count(w) > 0;
  return short_correct().count(Word(w.rbegin(), w.rend())) > 0;
}

}  // namespace

std::optional<Digit> L_triple(Digit x1, Digit x2, Digit x3) {
  const auto& m = l_table().middle[LTable::index(x1, x2, x3)];
  if (m.size() != 1) return std::nullopt;
  return *m.begin();
}

int L_witnesses(Digit x1, Digit x2, Digit x3) {
  return static_cast<int>(l_table().middle[LTable::index(x1, x2, x3)].size());
}

std::optional<Word> L_word(std::span<const Digit> column) {
  if (column.size() < 3) throw std::invalid_argument("L needs a column of length at least 3");
  Word out;
  out.reserve(column.size() - 2);
  for (std::size_t k = 0; k + 2 < column.size(); ++k) {
    auto b = L_triple(column[k], column[k + 1], column[k + 2]);
    if (!b) return std::nullopt;
    out.push_back(*b);
  }
  return out;
}

bool is_correct(std::span<const Digit> column) {
  if (column.size() <= 2) return short_correct().count(Word(column.begin(), column.end())) > 0;
  for (std::size_t k = 0; k + 2 < column.size(); ++k)
    if (!triple_defined(column[k], column[k + 1], column[k + 2])) return false;
  return true;
}

std::vector<Word> correct_words(int length, Alphabet alphabet, Reading reading) {
  std::vector<Word> out;
  Word cur;
  auto go = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == length) {
      if (length > 2 || short_ok(cur, reading)) out.push_back(cur);
      return;
    }
    for (Digit d = 0; d < 6; ++d) {
      if (!allows(alphabet, d)) continue;
      std::size_t k = cur.size();
      if (k >= 2 && !triple_ok(cur[k - 2], cur[k - 1], d, reading)) continue;
      cur.push_back(d);
      self(self);
      cur.pop_back();
    }
  };
  go(go);
  std::sort(out.begin(), out.end());
  return out;
}

PartialAutomaton build_correct_dfa(Alphabet alphabet, Reading reading) {
  // States remember the last two letters read (fewer at the start).
  std::map<Word, int> id;
  std::vector<Word> states;
  Dfa d;
  auto state = [&](const Word& w) {
    auto [it, fresh] = id.try_emplace(w, static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(w);
      d.delta.push_back(Transitions{kNoState, kNoState, kNoState, kNoState, kNoState, kNoState});
    }
    return it->second;
  };
  d.initial = state(Word{});
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (Digit x = 0; x < 6; ++x) {
      if (!allows(alphabet, x)) continue;
      Word w = states[s];
      w.push_back(x);
      bool ok = w.size() <= 2 ? short_ok(w, reading) : triple_ok(w[0], w[1], w[2], reading);
      if (!ok) continue;
      if (w.size() > 2) w.erase(w.begin());
      int t = state(w);
      d.delta[s][x] = t;
    }
  }
  Dfa m = minimize(d);
  return kernel_automaton(m, kernel(m));
}

std::size_t ColumnLemmaReport::count(std::string_view clause) const {
  auto it = failures.find(std::string(clause));
  return it == failures.end() ? 0 : it->second;
}

namespace {

// Rows of a pair family as a graph, top row -> bottom row. A stack of k
// pairs is a path with k edges.
struct RowGraph {
  std::vector<Word> rows;
  std::vector<std::vector<int>> below;

  explicit RowGraph(const std::vector<Window>& pairs) {
    for (const auto& w : pairs) {
      rows.push_back(w.row(0));
      rows.push_back(w.row(1));
    }
    sort_unique(rows);
    below.resize(rows.size());
    for (const auto& w : pairs) below[static_cast<std::size_t>(index(w.row(0)))].push_back(index(w.row(1)));
  }
  int index(const Word& r) const {
    return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin());
  }
  // Whether some stack spells `column` in its leftmost column.
  bool leftmost(const Word& column) const {
    std::vector<char> cur(rows.size());
    for (std::size_t v = 0; v < rows.size(); ++v) cur[v] = rows[v].back() == column[0];
    for (std::size_t k = 1; k < column.size(); ++k) {
      std::vector<char> next(rows.size(), 0);
      for (std::size_t v = 0; v < rows.size(); ++v)
        if (cur[v])
          for (int w : below[v])
            if (rows[static_cast<std::size_t>(w)].back() == column[k]) next[static_cast<std::size_t>(w)] = 1;
      cur.swap(next);
    }
    return std::any_of(cur.begin(), cur.end(), [](char c) { return c != 0; });
  }
};

}  // namespace

ColumnLemmaReport verify_column_lemmas(int n, int depth, const EnumerationLimits& limits) {
  if (n < 2 || depth < 2) throw std::invalid_argument("verify_column_lemmas needs n >= 2 and depth >= 2");
  ColumnLemmaReport r;
  auto fail = [&](std::string_view clause, const std::string& detail) {
    if (r.failures[std::string(clause)]++ == 0) r.examples.push_back({std::string(clause), detail});
  };

  auto pairs = enumerate_windows(2, 2, Shear::Straight, limits);
  RowGraph g(pairs);
  // Walk every stack with up to `depth` rows; per height collect columns.
  std::vector<std::set<Word>> rights(static_cast<std::size_t>(depth) + 1), lefts(rights.size());
  std::vector<int> path;
  auto column = [&](std::size_t j) {
    Word c;
    for (int v : path) c.push_back(g.rows[static_cast<std::size_t>(v)][j]);
    return c;
  };
  auto walk = [&](auto&& self) -> void {
    auto h = path.size();
    if (h >= 2) {
      ++r.stacks_checked;
      Word right = column(0);
      rights[h].insert(right);
      lefts[h].insert(column(1));
      if (h >= 3 && !is_correct(right)) {
        std::string text;
        for (int v : path) text += (text.empty() ? "" : "/") + row_string(g.rows[static_cast<std::size_t>(v)]);
        fail(column_clause::kRightCorrect, text);
      }
    }
    if (static_cast<int>(h) == depth) return;
    for (int w : g.below[static_cast<std::size_t>(path.back())]) {
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  for (std::size_t v = 0; v < g.rows.size(); ++v) {
    path = {static_cast<int>(v)};
    walk(walk);
  }
  for (int h = 2; h <= depth; ++h)
    for (const auto& l : lefts[static_cast<std::size_t>(h)])
      if (!rights[static_cast<std::size_t>(h)].count(l)) fail(column_clause::kLeftAmongRight, column_string(l));

  for (int h = 3; h <= depth; ++h)
    for (const auto& w : enumerate_windows(h, 2, Shear::Straight, limits))
      if (!is_correct(w.rightmost_column())) fail(column_clause::kWindowRightCorrect, w.to_string());

  auto tall = vpower(pairs, n - 1);
  auto kept = nondeadend(tall, Axis::Horizontal);
  if (kept != enumerate_windows(n, 2, Shear::Straight, limits))
    fail(column_clause::kNondeadend, std::to_string(kept.size()) + " non-dead-end stacks");

  RowGraph wide(enumerate_windows(2, n + 1, Shear::Straight, limits));
  for (int len = 1; len <= depth; ++len)
    for (const auto& c : correct_words(len, k0235)) {
      ++r.words_checked;
      if (!wide.leftmost(c)) fail(column_clause::kLeftmostCovers, column_string(c));
    }
  return r;
}

bool is_leftmost_column(std::span<const Digit> column, int n, const EnumerationLimits& limits) {
  if (!all_in(column, k0235)) throw std::invalid_argument("column must be over {0,2,3,5}");
  if (column.empty()) return true;
  RowGraph wide(enumerate_windows(2, n + 1, Shear::Straight, limits));
  return wide.leftmost(Word(column.begin(), column.end()));
}

UniquenessReport verify_local_uniqueness() {
  UniquenessReport r;
  std::map<Word, std::set<Digit>> by_right, by_bottom, by_top;
  for (const auto& w : enumerate_windows(3, 2, Shear::Straight)) by_right[w.rightmost_column()].insert(w.at(1, 1));
  for (const auto& w : enumerate_windows(2, 3, Shear::Straight)) {
    by_bottom[w.row(1)].insert(w.at(0, 1));
    by_top[w.row(0)].insert(w.at(1, 1));
  }
  for (const auto& [k, v] : by_right) r.right_column_conflicts += v.size() > 1;
  for (const auto& [k, v] : by_bottom) r.bottom_row_conflicts += v.size() > 1;
  for (const auto& [k, v] : by_top) r.top_row_conflicts += v.size() > 1;
  return r;
}

std::size_t closure_failures(int min_len, int max_len) {
  std::size_t bad = 0;
  for (int len = std::max(min_len, 3); len <= max_len; ++len)
    for (const auto& w : correct_words(len, kAllDigits)) {
      auto img = L_word(w);
      if (!img || !is_correct(*img)) ++bad;
    }
  return bad;
}

}  // namespace sesqui
