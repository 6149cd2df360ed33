#include "sesqui/automaton.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sesqui {

int PartialAutomaton::letters_at(std::size_t s) const {
  return static_cast<int>(std::count_if(delta[s].begin(), delta[s].end(), [](int t) { return t != kNoState; }));
}

bool PartialAutomaton::accepts(std::span<const Digit> w) const {
  std::vector<char> cur(size(), 1), next(size());
  for (Digit x : w) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (std::size_t s = 0; s < size(); ++s)
      if (cur[s] && delta[s][x] != kNoState) {
        next[static_cast<std::size_t>(delta[s][x])] = 1;
        any = true;
      }
    if (!any) return false;
    cur.swap(next);
  }
  return size() > 0;
}

int Dfa::run(std::span<const Digit> w, int from) const {
  int s = from;
  for (Digit x : w) {
    if (s == kNoState) return kNoState;
    s = delta[static_cast<std::size_t>(s)][x];
  }
  return s;
}

std::vector<int> language_partition(std::span<const Transitions> delta) {
  // Moore refinement; every state is final, a missing transition goes to
  // the rejecting sink, encoded as class -1.
  const std::size_t n = delta.size();
  std::vector<int> cls(n, 0);
  std::size_t count = n ? 1 : 0;
  for (;;) {
    std::map<std::array<int, 7>, int> ids;
    std::vector<int> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::array<int, 7> sig{};
      sig[0] = cls[s];
      for (std::size_t x = 0; x < 6; ++x) sig[x + 1] = delta[s][x] == kNoState ? -1 : cls[static_cast<std::size_t>(delta[s][x])];
      next[s] = ids.try_emplace(sig, static_cast<int>(ids.size())).first->second;
    }
    cls = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  // Renumber by first occurrence.
  std::vector<int> order(count, -1);
  int k = 0;
  for (auto& c : cls) {
    auto& o = order[static_cast<std::size_t>(c)];
    if (o < 0) o = k++;
    c = o;
  }
  return cls;
}

std::vector<int> language_partition(const PartialAutomaton& a) { return language_partition(a.delta); }

Dfa minimize(const Dfa& d) {
  // Reachable part, in BFS order from the initial state.
  std::vector<int> id(d.size(), -1);
  std::vector<int> order{d.initial};
  id[static_cast<std::size_t>(d.initial)] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int t : d.delta[static_cast<std::size_t>(order[k])])
      if (t != kNoState && id[static_cast<std::size_t>(t)] < 0) {
        id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
      }
  std::vector<Transitions> reach(order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t x = 0; x < 6; ++x) {
      int t = d.delta[static_cast<std::size_t>(order[k])][x];
      reach[k][x] = t == kNoState ? kNoState : id[static_cast<std::size_t>(t)];
    }
  auto cls = language_partition(reach);
  int classes = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  Dfa m;
  m.delta.assign(static_cast<std::size_t>(classes), Transitions{kNoState, kNoState, kNoState, kNoState, kNoState, kNoState});
  for (std::size_t k = 0; k < reach.size(); ++k)
    for (std::size_t x = 0; x < 6; ++x)
      if (reach[k][x] != kNoState) m.delta[static_cast<std::size_t>(cls[k])][x] = cls[static_cast<std::size_t>(reach[k][x])];
  m.initial = cls.empty() ? 0 : cls[0];
  return m;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Iterative Tarjan; returns the SCC id of each state.
std::vector<int> strongly_connected(std::span<const Transitions> delta) {
  const int n = static_cast<int>(delta.size());
  std::vector<int> index(delta.size(), -1), low(delta.size()), comp(delta.size(), -1), stack;
  std::vector<char> on(delta.size(), 0);
  int counter = 0, comps = 0;
  std::vector<std::pair<int, int>> call;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, x] = call.back();
      auto vs = static_cast<std::size_t>(v);
      if (x == 0 && index[vs] < 0) {
        index[vs] = low[vs] = counter++;
        stack.push_back(v);
        on[vs] = 1;
      }
      bool descended = false;
      while (x < 6) {
        int w = delta[vs][static_cast<std::size_t>(x++)];
        if (w == kNoState) continue;
        auto ws = static_cast<std::size_t>(w);
        if (index[ws] < 0) {
          call.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on[ws]) low[vs] = std::min(low[vs], index[ws]);
      }
      if (descended) continue;
      if (low[vs] == index[vs]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = comps;
        } while (w != v);
        ++comps;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) {
        auto p = static_cast<std::size_t>(call.back().first);
        low[p] = std::min(low[p], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  return comp;
}

}  // namespace

Dfa determinize_minimize(const PartialAutomaton& a) {
  std::vector<int> all(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) all[s] = static_cast<int>(s);
  std::unordered_map<std::vector<int>, int, VecHash> id;
  std::vector<std::vector<int>> subsets{all};
  id.emplace(all, 0);
  Dfa d;
  d.initial = 0;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    Transitions row{kNoState, kNoState, kNoState, kNoState, kNoState, kNoState};
    for (std::size_t x = 0; x < 6; ++x) {
      std::vector<int> t;
      for (int s : subsets[k])
        if (int u = a.delta[static_cast<std::size_t>(s)][x]; u != kNoState) t.push_back(u);
      if (t.empty()) continue;
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      auto [it, fresh] = id.try_emplace(t, static_cast<int>(subsets.size()));
      if (fresh) subsets.push_back(std::move(t));
      row[x] = it->second;
    }
    d.delta.push_back(row);
  }
  return minimize(d);
}

KernelReport kernel(const Dfa& d) {
  KernelReport r;
  auto comp = strongly_connected(d.delta);
  std::vector<int> comp_size(d.size(), 0);
  for (int c : comp) ++comp_size[static_cast<std::size_t>(c)];
  std::vector<char> in(d.size(), 0);
  for (std::size_t s = 0; s < d.size(); ++s) {
    bool loop = std::find(d.delta[s].begin(), d.delta[s].end(), static_cast<int>(s)) != d.delta[s].end();
    if (comp_size[static_cast<std::size_t>(comp[s])] > 1 || loop) {
      in[s] = 1;
      r.states.push_back(static_cast<int>(s));
    }
  }

  // Absorption; on failure record a word entering the kernel and leaving it.
  std::vector<int> parent(d.size(), -1);
  std::vector<Digit> via(d.size(), 0);
  std::vector<int> bfs{d.initial};
  std::vector<char> seen(d.size(), 0);
  seen[static_cast<std::size_t>(d.initial)] = 1;
  for (std::size_t k = 0; k < bfs.size(); ++k) {
    auto s = static_cast<std::size_t>(bfs[k]);
    for (std::size_t x = 0; x < 6; ++x) {
      int t = d.delta[s][x];
      if (t == kNoState) continue;
      if (in[s] && !in[static_cast<std::size_t>(t)] && r.absorbing) {
        r.absorbing = false;
        std::vector<Digit> w{static_cast<Digit>(x)};
        for (auto v = static_cast<int>(s); parent[static_cast<std::size_t>(v)] >= 0; v = parent[static_cast<std::size_t>(v)])
          w.push_back(via[static_cast<std::size_t>(v)]);
        std::reverse(w.begin(), w.end());
        r.witness = std::move(w);
      }
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = 1;
        parent[static_cast<std::size_t>(t)] = static_cast<int>(s);
        via[static_cast<std::size_t>(t)] = static_cast<Digit>(x);
        bfs.push_back(t);
      }
    }
  }

  // eta: least l with every length-l path from the initial state in the kernel.
  std::vector<char> level(d.size(), 0), next(d.size());
  level[static_cast<std::size_t>(d.initial)] = 1;
  r.eta = -1;
  for (int l = 0; l <= static_cast<int>(d.size()) + 1; ++l) {
    bool outside = false;
    for (std::size_t s = 0; s < d.size(); ++s) outside |= level[s] && !in[s];
    if (!outside) {
      r.eta = l;
      break;
    }
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t s = 0; s < d.size(); ++s)
      if (level[s])
        for (int t : d.delta[s])
          if (t != kNoState) next[static_cast<std::size_t>(t)] = 1;
    level.swap(next);
  }

  r.theta = -1;
  int s = d.initial;
  for (int t = 0; s != kNoState && t <= static_cast<int>(d.size()); ++t) {
    if (in[static_cast<std::size_t>(s)]) {
      r.theta = t;
      break;
    }
    s = d.delta[static_cast<std::size_t>(s)][0];
  }
  return r;
}

PartialAutomaton kernel_automaton(const Dfa& d, const KernelReport& k) {
  std::vector<int> id(d.size(), kNoState);
  for (std::size_t i = 0; i < k.states.size(); ++i) id[static_cast<std::size_t>(k.states[i])] = static_cast<int>(i);
  PartialAutomaton a;
  for (int s : k.states) {
    Transitions row{kNoState, kNoState, kNoState, kNoState, kNoState, kNoState};
    for (std::size_t x = 0; x < 6; ++x)
      if (int t = d.delta[static_cast<std::size_t>(s)][x]; t != kNoState) row[x] = id[static_cast<std::size_t>(t)];
    a.delta.push_back(row);
    a.labels.push_back("q" + std::to_string(s));
  }
  return a;
}

namespace {

bool extend(const PartialAutomaton& a, const PartialAutomaton& b, std::vector<int>& fwd, std::vector<int>& back, int s,
            int t) {
  std::vector<std::pair<int, int>> todo{{s, t}};
  while (!todo.empty()) {
    auto [u, v] = todo.back();
    todo.pop_back();
    auto us = static_cast<std::size_t>(u), vs = static_cast<std::size_t>(v);
    if (fwd[us] == v && back[vs] == u) continue;
    if (fwd[us] != kNoState || back[vs] != kNoState) return false;
    fwd[us] = v;
    back[vs] = u;
    for (std::size_t x = 0; x < 6; ++x) {
      int p = a.delta[us][x], q = b.delta[vs][x];
      if ((p == kNoState) != (q == kNoState)) return false;
      if (p != kNoState) todo.emplace_back(p, q);
    }
  }
  return true;
}

bool iso_search(const PartialAutomaton& a, const PartialAutomaton& b, const std::vector<int>& cls, std::vector<int>& fwd,
                std::vector<int>& back) {
  auto it = std::find(fwd.begin(), fwd.end(), kNoState);
  if (it == fwd.end()) return true;
  auto s = static_cast<std::size_t>(it - fwd.begin());
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (back[t] != kNoState || cls[s] != cls[a.size() + t]) continue;
    auto f = fwd, g = back;
    if (extend(a, b, f, g, static_cast<int>(s), static_cast<int>(t)) && iso_search(a, b, cls, f, g)) {
      fwd = std::move(f);
      back = std::move(g);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> automaton_iso(const PartialAutomaton& a, const PartialAutomaton& b) {
  if (a.size() != b.size()) return std::nullopt;
  // Joint language classes restrict the candidate images.
  std::vector<Transitions> joint(a.delta);
  for (auto row : b.delta) {
    for (auto& t : row)
      if (t != kNoState) t += static_cast<int>(a.size());
    joint.push_back(row);
  }
  auto cls = language_partition(joint);
  std::vector<int> fwd(a.size(), kNoState), back(b.size(), kNoState);
  if (!iso_search(a, b, cls, fwd, back)) return std::nullopt;
  return fwd;
}

PartialAutomaton automaton_from_graph(const Digraph& g) {
  if (g.words.size() != g.size()) throw std::invalid_argument("automaton needs row-labeled vertices");
  PartialAutomaton a;
  a.labels = g.labels();
  a.delta.assign(g.size(), Transitions{kNoState, kNoState, kNoState, kNoState, kNoState, kNoState});
  for (std::size_t v = 0; v < g.size(); ++v)
    for (int w : g.out(static_cast<int>(v))) {
      Digit x = g.words[static_cast<std::size_t>(w)].back();
      int& slot = a.delta[v][x];
      if (slot != kNoState)
        throw std::runtime_error("successors of " + g.label(static_cast<int>(v)) + " share leftmost digit " +
                                 std::to_string(x));
      slot = w;
    }
  return a;
}

PartialAutomaton build_A(int n, const EnumerationLimits& limits) { return automaton_from_graph(build_G(n, kSelectedShear, limits)); }

PartialAutomaton fold_A(const PartialAutomaton& a) {
  std::map<std::vector<int>, std::vector<int>> by_targets;
  for (std::size_t s = 0; s < a.size(); ++s) {
    std::vector<int> t;
    for (int u : a.delta[s])
      if (u != kNoState) t.push_back(u);
    std::sort(t.begin(), t.end());
    by_targets[t].push_back(static_cast<int>(s));
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [t, ss] : by_targets) {
    if (ss.size() != 2)
      throw NotPairable("state " + a.labels[static_cast<std::size_t>(ss[0])] + " shares its successors with " +
                        std::to_string(ss.size() - 1) + " other states");
    pairs.emplace_back(ss[0], ss[1]);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> cls(a.size());
  PartialAutomaton f;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [p, q] = pairs[k];
    cls[static_cast<std::size_t>(p)] = cls[static_cast<std::size_t>(q)] = static_cast<int>(k);
    f.labels.push_back("{" + a.labels[static_cast<std::size_t>(p)] + "," + a.labels[static_cast<std::size_t>(q)] + "}");
  }
  f.delta.assign(pairs.size(), Transitions{kNoState, kNoState, kNoState, kNoState, kNoState, kNoState});
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t x = 0; x < 6; ++x) {
      int t = a.delta[s][x];
      if (t == kNoState) continue;
      int& slot = f.delta[static_cast<std::size_t>(cls[s])][x];
      int target = cls[static_cast<std::size_t>(t)];
      if (slot != kNoState && slot != target) throw std::runtime_error("folded automaton is not deterministic");
      slot = target;
    }
  return f;
}

std::string_view to_string(KernelMatch m) {
  switch (m) {
    case KernelMatch::Full: return "full";
    case KernelMatch::Folded: return "folded";
    case KernelMatch::Both: return "both";
    case KernelMatch::Neither: return "neither";
  }
  return "neither";
}

AutomatonSummary summarize_automata(int n, const EnumerationLimits& limits) {
  AutomatonSummary s;
  s.n = n;
  auto a = build_A(n, limits);
  auto classes = [](const PartialAutomaton& p) {
    auto c = language_partition(p);
    return c.empty() ? std::size_t{0} : static_cast<std::size_t>(*std::max_element(c.begin(), c.end()) + 1);
  };
  s.a_states = a.size();
  s.a_classes = classes(a);
  auto f = fold_A(a);
  s.folded_states = f.size();
  s.folded_classes = classes(f);
  auto d = determinize_minimize(a);
  s.dfa_states = d.size();
  auto k = kernel(d);
  s.kernel_states = k.states.size();
  s.eta = k.eta;
  s.theta = k.theta;
  auto ka = kernel_automaton(d, k);
  bool full = automaton_iso(ka, a).has_value();
  bool folded = automaton_iso(ka, f).has_value();
  s.kernel_match = full && folded ? KernelMatch::Both : full ? KernelMatch::Full : folded ? KernelMatch::Folded : KernelMatch::Neither;
  return s;
}

std::string to_dot(const PartialAutomaton& a, std::string_view name) {
  std::ostringstream s;
  s << "digraph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < a.size(); ++v) {
    std::string label = v < a.labels.size() ? a.labels[v] : "q" + std::to_string(v);
    s << "  q" << v << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t v = 0; v < a.size(); ++v)
    for (std::size_t x = 0; x < 6; ++x)
      if (a.delta[v][x] != kNoState) s << "  q" << v << " -> q" << a.delta[v][x] << " [label=\"" << x << "\"];\n";
  s << "}\n";
  return s.str();
}

std::string to_dot(const Dfa& d, std::string_view name) {
  std::ostringstream s;
  s << "digraph \"" << name << "\" {\n  start [shape=point];\n  start -> q" << d.initial << ";\n";
  for (std::size_t v = 0; v < d.size(); ++v)
    for (std::size_t x = 0; x < 6; ++x)
      if (d.delta[v][x] != kNoState) s << "  q" << v << " -> q" << d.delta[v][x] << " [label=\"" << x << "\"];\n";
  s << "}\n";
  return s.str();
}

}  // namespace sesqui
