#include "sesqui/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <sstream>

#include "sesqui/correct.hpp"

namespace sesqui {

Digraph::Digraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), out_(labels_.size()), in_(labels_.size()) {}

std::size_t Digraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& o : out_) e += o.size();
  return e;
}

std::optional<int> Digraph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

bool Digraph::has_edge(int u, int v) const {
  const auto& o = out(u);
  return std::binary_search(o.begin(), o.end(), v);
}

void Digraph::add_edge(int u, int v) {
  auto& o = out_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(o.begin(), o.end(), v);
  if (it != o.end() && *it == v) return;
  o.insert(it, v);
  auto& i = in_[static_cast<std::size_t>(v)];
  i.insert(std::lower_bound(i.begin(), i.end(), u), u);
}

void Digraph::remove_edge(int u, int v) {
  auto& o = out_[static_cast<std::size_t>(u)];
  o.erase(std::remove(o.begin(), o.end(), v), o.end());
  auto& i = in_[static_cast<std::size_t>(v)];
  i.erase(std::remove(i.begin(), i.end(), u), i.end());
}

Digraph Digraph::reversed() const {
  Digraph r(labels_);
  r.words = words;
  for (std::size_t u = 0; u < size(); ++u)
    for (int v : out_[u]) r.add_edge(v, static_cast<int>(u));
  return r;
}

bool Digraph::regular(std::size_t k) const {
  for (std::size_t v = 0; v < size(); ++v)
    if (out_[v].size() != k || in_[v].size() != k) return false;
  return true;
}

PairSet build_S(int n, Shear shear, const EnumerationLimits& limits) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return pair_family_0235(n, shear, limits);
}

Digraph graph_from_pairs(const PairSet& pairs) {
  auto rows = pairs.distinct_rows();
  std::vector<std::string> labels;
  for (const auto& r : rows) labels.push_back(row_string(r));
  Digraph g(labels);
  g.words = rows;
  auto index = [&](const Word& w) {
    return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), w) - rows.begin());
  };
  for (const auto& w : pairs.members) g.add_edge(index(w.row(0)), index(w.row(1)));
  return g;
}

Digraph build_G(int n, Shear shear, const EnumerationLimits& limits) {
  return graph_from_pairs(build_S(n, shear, limits));
}

Digraph build_Gamma(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  auto cols = correct_words(2 * n - 1, k0235, Reading::TopDown);
  std::vector<std::string> labels;
  for (const auto& c : cols) labels.push_back(column_string(c));
  Digraph g(labels);
  g.words = cols;
  std::map<Word, std::vector<int>> by_prefix;
  for (std::size_t v = 0; v < cols.size(); ++v)
    by_prefix[Word(cols[v].begin(), cols[v].end() - 1)].push_back(static_cast<int>(v));
  for (std::size_t u = 0; u < cols.size(); ++u) {
    Word tail(cols[u].begin() + 1, cols[u].end());
    if (auto it = by_prefix.find(tail); it != by_prefix.end())
      for (int v : it->second) g.add_edge(static_cast<int>(u), v);
  }
  return g;
}

FoldMap fold(const Digraph& g) {
  std::map<std::vector<int>, std::vector<int>> by_out;
  for (std::size_t v = 0; v < g.size(); ++v) by_out[g.out(static_cast<int>(v))].push_back(static_cast<int>(v));
  FoldMap f;
  f.class_of.assign(g.size(), -1);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [out, vs] : by_out) {
    if (vs.size() != 2)
      throw NotPairable("vertex " + g.label(vs[0]) + " shares its successors with " + std::to_string(vs.size() - 1) +
                        " other vertices");
    pairs.emplace_back(vs[0], vs[1]);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [a, b] = pairs[k];
    f.class_of[static_cast<std::size_t>(a)] = f.class_of[static_cast<std::size_t>(b)] = static_cast<int>(k);
    labels.push_back("{" + g.label(a) + "," + g.label(b) + "}");
  }
  f.pairs = pairs;
  f.quotient = Digraph(labels);
  for (std::size_t v = 0; v < g.size(); ++v)
    for (int t : g.out(static_cast<int>(v)))
      f.quotient.add_edge(f.class_of[v], f.class_of[static_cast<std::size_t>(t)]);
  return f;
}

namespace {

// Joint color refinement over the disjoint union a + b.
struct Coloring {
  const Digraph& a;
  const Digraph& b;
  std::vector<int> color;  // size a + b

  std::size_t na() const { return a.size(); }

  const std::vector<int>& out(std::size_t v) const {
    return v < na() ? a.out(static_cast<int>(v)) : b.out(static_cast<int>(v - na()));
  }
  const std::vector<int>& in(std::size_t v) const {
    return v < na() ? a.in(static_cast<int>(v)) : b.in(static_cast<int>(v - na()));
  }
  std::size_t offset(std::size_t v) const { return v < na() ? 0 : na(); }

  void refine() {
    std::size_t classes = std::set<int>(color.begin(), color.end()).size();
    for (;;) {
      std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> ids;
      std::vector<int> next(color.size());
      for (std::size_t v = 0; v < color.size(); ++v) {
        std::vector<int> o, i;
        for (int w : out(v)) o.push_back(color[offset(v) + static_cast<std::size_t>(w)]);
        for (int w : in(v)) i.push_back(color[offset(v) + static_cast<std::size_t>(w)]);
        std::sort(o.begin(), o.end());
        std::sort(i.begin(), i.end());
        auto key = std::make_tuple(color[v], std::move(o), std::move(i));
        auto it = ids.try_emplace(std::move(key), static_cast<int>(ids.size())).first;
        next[v] = it->second;
      }
      color = std::move(next);
      if (ids.size() == classes) return;
      classes = ids.size();
    }
  }

  bool balanced() const {
    std::map<int, long> diff;
    for (std::size_t v = 0; v < color.size(); ++v) diff[color[v]] += v < na() ? 1 : -1;
    return std::all_of(diff.begin(), diff.end(), [](const auto& p) { return p.second == 0; });
  }
};

bool search(Coloring& c, std::vector<int>& result) {
  c.refine();
  if (!c.balanced()) return false;
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < c.color.size(); ++v) classes[c.color[v]].push_back(v);
  // Smallest non-singleton class.
  const std::vector<std::size_t>* pick = nullptr;
  for (const auto& [col, vs] : classes)
    if (vs.size() > 2 && (!pick || vs.size() < pick->size())) pick = &vs;
  if (!pick) {
    std::vector<int> map(c.na(), -1);
    for (const auto& [col, vs] : classes) map[vs[0]] = static_cast<int>(vs[1] - c.na());
    if (is_isomorphism(c.a, c.b, map)) {
      result = std::move(map);
      return true;
    }
    return false;
  }
  std::size_t v = (*pick)[0];
  int fresh = *std::max_element(c.color.begin(), c.color.end()) + 1;
  for (std::size_t w : *pick) {
    if (w < c.na()) continue;
    Coloring next{c.a, c.b, c.color};
    next.color[v] = fresh;
    next.color[w] = fresh;
    if (search(next, result)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphism(const Digraph& a, const Digraph& b, const std::vector<int>& map) {
  if (a.size() != b.size() || map.size() != a.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<bool> hit(b.size(), false);
  for (int m : map) {
    if (m < 0 || static_cast<std::size_t>(m) >= b.size() || hit[static_cast<std::size_t>(m)]) return false;
    hit[static_cast<std::size_t>(m)] = true;
  }
  for (std::size_t u = 0; u < a.size(); ++u)
    for (int v : a.out(static_cast<int>(u)))
      if (!b.has_edge(map[u], map[static_cast<std::size_t>(v)])) return false;
  return true;
}

std::optional<std::vector<int>> iso(const Digraph& a, const Digraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.size() == 0) return std::vector<int>{};
  Coloring c{a, b, std::vector<int>(a.size() + b.size(), 0)};
  std::vector<int> result;
  if (search(c, result)) return result;
  return std::nullopt;
}

bool dual_automorphism(const Digraph& g) {
  if (g.words.size() != g.size()) throw std::invalid_argument("dual_automorphism needs row-labeled vertices");
  std::map<Word, int> index;
  for (std::size_t v = 0; v < g.size(); ++v) index[g.words[v]] = static_cast<int>(v);
  std::vector<int> map(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto it = index.find(dual(g.words[v]));
    if (it == index.end()) return false;
    map[v] = it->second;
  }
  return is_isomorphism(g, g, map);
}

std::string to_dot(const Digraph& g, std::string_view name) {
  std::ostringstream s;
  s << "digraph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < g.size(); ++v) s << "  n" << v << " [label=\"" << g.label(static_cast<int>(v)) << "\"];\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    for (int w : g.out(static_cast<int>(v))) s << "  n" << v << " -> n" << w << ";\n";
  s << "}\n";
  return s.str();
}

}  // namespace sesqui
