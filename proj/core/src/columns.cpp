#include "sesqui/columns.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sesqui/correct.hpp"
#include "sesqui/graph.hpp"

namespace sesqui {

namespace {

// Calls visit(path) for every path of `rows` vertices whose leftmost digits
// pass `keep` row by row.
template <class Keep, class Visit>
void walk_paths(const Digraph& g, int rows, Keep&& keep, Visit&& visit) {
  std::vector<int> path;
  auto go = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == rows) {
      visit(path);
      return;
    }
    for (int w : g.out(path.back()))
      if (keep(path.size(), w)) {
        path.push_back(w);
        self(self);
        path.pop_back();
      }
  };
  for (std::size_t v = 0; v < g.size(); ++v)
    if (keep(0, static_cast<int>(v))) {
      path = {static_cast<int>(v)};
      go(go);
    }
}

Window stack_of(const Digraph& g, const std::vector<int>& path) {
  std::vector<Word> rows;
  for (int v : path) rows.push_back(g.words[static_cast<std::size_t>(v)]);
  return Window(rows, kSelectedShear);
}

DeterminismReport determinism(int n, int rows, const EnumerationLimits& limits, bool kernel_only) {
  if (n < 1 || rows < 1) throw std::invalid_argument("stack shape must be positive");
  DeterminismReport r;
  r.n = n;
  r.rows = rows;
  auto g = build_G(n, kSelectedShear, limits);
  Dfa d;
  std::vector<char> in_kernel;
  if (kernel_only) {
    d = determinize_minimize(automaton_from_graph(g));
    in_kernel.assign(d.size(), 0);
    for (int s : kernel(d).states) in_kernel[static_cast<std::size_t>(s)] = 1;
  }
  std::map<Word, std::vector<Window>> by_column;
  walk_paths(g, rows, [](std::size_t, int) { return true; }, [&](const std::vector<int>& path) {
    Window w = stack_of(g, path);
    Word c = w.leftmost_column();
    if (kernel_only) {
      int s = d.run(c, d.initial);
      if (s == kNoState || !in_kernel[static_cast<std::size_t>(s)]) return;
    }
    ++r.stacks;
    by_column[c].push_back(std::move(w));
  });
  r.columns = by_column.size();
  for (auto& [c, ws] : by_column)
    if (ws.size() > 1) {
      if (r.ambiguous_columns++ == 0) r.witness = {ws[0], ws[1]};
    }
  return r;
}

std::size_t zero_column_failures(const Digraph& g, int rows, std::size_t* total) {
  std::size_t bad = 0, all = 0;
  walk_paths(
      g, rows, [&](std::size_t, int v) { return g.words[static_cast<std::size_t>(v)].back() == 0; },
      [&](const std::vector<int>& path) {
        ++all;
        bool zero = std::all_of(path.begin(), path.end(), [&](int v) {
          const auto& w = g.words[static_cast<std::size_t>(v)];
          return std::all_of(w.begin(), w.end(), [](Digit x) { return x == 0; });
        });
        bad += !zero;
      });
  if (total) *total = all;
  return bad;
}

}  // namespace

std::vector<Window> stacks_0235(int n, int rows, const EnumerationLimits& limits) {
  if (n < 1 || rows < 1) throw std::invalid_argument("stack shape must be positive");
  auto g = build_G(n, kSelectedShear, limits);
  std::vector<Window> out;
  walk_paths(g, rows, [](std::size_t, int) { return true; },
             [&](const std::vector<int>& path) { out.push_back(stack_of(g, path)); });
  sort_unique(out);
  return out;
}

DeterminismReport leftmost_column_determinism(int n, int rows, const EnumerationLimits& limits) {
  return determinism(n, rows, limits, false);
}

DeterminismReport kernel_column_determinism(int n, int rows, const EnumerationLimits& limits) {
  return determinism(n, rows, limits, true);
}

int zero_word_depth(int n, const EnumerationLimits& limits) {
  return kernel(determinize_minimize(build_A(n, limits))).theta;
}

ZeroColumnReport zero_column_propagation(int n, int rows, int max_rows, const EnumerationLimits& limits) {
  if (n < 1 || rows < 1) throw std::invalid_argument("stack shape must be positive");
  ZeroColumnReport r;
  r.n = n;
  r.rows = rows;
  auto g = build_G(n, kSelectedShear, limits);
  r.nonzero_stacks = zero_column_failures(g, rows, &r.zero_column_stacks);
  for (int h = 1; h <= max_rows; ++h)
    if (zero_column_failures(g, h, nullptr) == 0) {
      r.minimal_rows = h;
      break;
    }
  return r;
}

BijectionReport triangle_bijection(int k, const EnumerationLimits& limits) {
  if (k < 1) throw std::invalid_argument("triangle size must be positive");
  BijectionReport r;
  r.size = k;
  std::map<Word, std::set<Word>> back;
  for (const auto& v : correct_words(2 * k + 1, k0235)) {
    ++r.domain;
    Word diagonal{v[0]};
    Word col = v;
    for (int j = 1; j <= k; ++j) {
      auto next = L_word(col);
      if (!next) {
        r.functional = false;
        break;
      }
      col = std::move(*next);
      diagonal.push_back(col[0]);
    }
    if (static_cast<int>(diagonal.size()) == k + 1) back[diagonal].insert(v);
  }
  r.image = back.size();
  for (const auto& [d, vs] : back) r.injective &= vs.size() == 1;
  auto g = build_G(k + 1, kSelectedShear, limits);
  r.expected = g.size();
  std::set<Word> target(g.words.begin(), g.words.end());
  std::set<Word> image;
  for (const auto& [d, vs] : back) image.insert(d);
  r.onto = image == target;
  return r;
}

BijectionReport square_bijection(int k, int rows, const EnumerationLimits& limits) {
  if (k < 1) throw std::invalid_argument("square size must be positive");
  if (rows == 0) rows = 2 * k + 1;
  BijectionReport r;
  r.size = k;
  auto g = build_G(k + 1, kSelectedShear, limits);
  std::map<Word, std::set<Word>> right_of;  // top row -> right columns
  std::map<Word, std::set<Word>> top_of;    // right column -> top rows
  walk_paths(g, rows, [](std::size_t, int) { return true; }, [&](const std::vector<int>& path) {
    Word col;
    for (int v : path) col.push_back(g.words[static_cast<std::size_t>(v)][0]);
    const Word& top = g.words[static_cast<std::size_t>(path[0])];
    right_of[top].insert(col);
    top_of[col].insert(top);
  });
  r.domain = right_of.size();
  r.image = top_of.size();
  for (const auto& [t, cs] : right_of) r.functional &= cs.size() == 1;
  for (const auto& [c, ts] : top_of) r.injective &= ts.size() == 1;
  auto target = correct_words(rows, k0235);
  r.expected = target.size();
  r.onto = top_of.size() == target.size() &&
           std::equal(target.begin(), target.end(), top_of.begin(), [](const Word& a, const auto& b) { return a == b.first; });
  return r;
}

}  // namespace sesqui
