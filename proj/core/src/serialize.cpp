#include "sesqui/serialize.hpp"

#include <sstream>

namespace sesqui {

namespace {

json rows_of(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(row_string(w));
  return a;
}

json transitions(std::span<const Transitions> delta, const std::vector<std::string>* labels) {
  json a = json::array();
  for (std::size_t s = 0; s < delta.size(); ++s) {
    json out = json::object();
    for (int d = 0; d < 6; ++d) {
      int t = delta[s][static_cast<std::size_t>(d)];
      if (t == kNoState) continue;
      out[std::to_string(d)] = labels ? json((*labels)[static_cast<std::size_t>(t)]) : json(t);
    }
    a.push_back(std::move(out));
  }
  return a;
}

std::string transitions_text(std::span<const Transitions> delta, const std::vector<std::string>* labels) {
  std::ostringstream s;
  s << "state,letter,target\n";
  auto name = [&](std::size_t i) { return labels ? (*labels)[i] : std::to_string(i); };
  for (std::size_t q = 0; q < delta.size(); ++q)
    for (int d = 0; d < 6; ++d)
      if (int t = delta[q][static_cast<std::size_t>(d)]; t != kNoState)
        s << name(q) << ',' << d << ',' << name(static_cast<std::size_t>(t)) << '\n';
  return s.str();
}

}  // namespace

void to_json(json& j, const Window& w) {
  json rows = json::array();
  for (int i = 0; i < w.rows(); ++i) rows.push_back(row_string(w.row(i)));
  j = json{{"rows", std::move(rows)}, {"shear", to_string(w.shear())}};
}

void to_json(json& j, const PairSet& p) {
  j = json{{"axis", p.axis == Axis::Horizontal ? "horizontal" : "vertical"},
           {"width", p.width},
           {"shear", to_string(p.shear)},
           {"orientation", kShearOrientation},
           {"count", p.size()},
           {"members", json::array()}};
  for (const auto& w : p.members) {
    json rows = json::array();
    for (int i = 0; i < w.rows(); ++i) rows.push_back(row_string(w.row(i)));
    j["members"].push_back(std::move(rows));
  }
}

void to_json(json& j, const HTable& t) { j = json{{"tops", rows_of(t.tops)}, {"bottoms", rows_of(t.bottoms)}}; }

void to_json(json& j, const VTable& t) {
  json l = json::array(), r = json::array();
  for (const auto& c : t.lefts) l.push_back(column_string(c));
  for (const auto& c : t.rights) r.push_back(column_string(c));
  j = json{{"lefts", std::move(l)}, {"rights", std::move(r)}};
}

void to_json(json& j, const Violation& v) { j = json{{"clause", v.clause}, {"detail", v.detail}}; }

void to_json(json& j, const TableFamilyReport& r) {
  json hist = json::array();
  for (const auto& [shape, count] : r.class_histogram)
    hist.push_back(json{{"tops", shape.first}, {"bottoms", shape.second}, {"tables", count}});
  j = json{{"n", r.n},
           {"family", to_string(r.family)},
           {"rightmost_0235", r.with_0235},
           {"pairs", r.pair_count},
           {"tables", r.table_count},
           {"expected_tables", r.expected_tables},
           {"distinct_rows", r.row_count},
           {"expected_rows", r.expected_rows},
           {"top_rows", r.top_rows},
           {"bottom_rows", r.bottom_rows},
           {"split_tables", r.split_table_count},
           {"shapes", std::move(hist)},
           {"violations", r.violations}};
}

void to_json(json& j, const Digraph& g) {
  json edges = json::array();
  for (std::size_t v = 0; v < g.size(); ++v)
    for (int w : g.out(static_cast<int>(v))) edges.push_back(json::array({g.labels()[v], g.label(w)}));
  j = json{{"vertices", g.labels()}, {"edge_count", g.edge_count()}, {"edges", std::move(edges)}};
}

void to_json(json& j, const FoldMap& f) {
  json pairs = json::array();
  for (auto [a, b] : f.pairs) pairs.push_back(json::array({a, b}));
  j = json{{"pairs", std::move(pairs)}, {"class_of", f.class_of}, {"quotient", f.quotient}};
}

void to_json(json& j, const PartialAutomaton& a) {
  j = json{{"states", a.labels}, {"transitions", transitions(a.delta, &a.labels)}};
}

void to_json(json& j, const Dfa& d) {
  j = json{{"size", d.size()}, {"initial", d.initial}, {"transitions", transitions(d.delta, nullptr)}};
}

void to_json(json& j, const KernelReport& k) {
  j = json{{"states", k.states}, {"eta", k.eta}, {"theta", k.theta}, {"absorbing", k.absorbing}};
  if (!k.witness.empty()) j["escape_word"] = column_string(k.witness);
}

void to_json(json& j, const AutomatonSummary& s) {
  j = json{{"n", s.n},
           {"a_states", s.a_states},
           {"a_classes", s.a_classes},
           {"folded_states", s.folded_states},
           {"folded_classes", s.folded_classes},
           {"dfa_states", s.dfa_states},
           {"kernel_states", s.kernel_states},
           {"kernel_match", to_string(s.kernel_match)},
           {"eta", s.eta},
           {"theta", s.theta}};
}

void to_json(json& j, const ColumnLemmaReport& r) {
  j = json{{"failures", r.failures},
           {"examples", r.examples},
           {"stacks_checked", r.stacks_checked},
           {"words_checked", r.words_checked}};
}

void to_json(json& j, const DeterminismReport& r) {
  j = json{{"n", r.n}, {"rows", r.rows}, {"stacks", r.stacks}, {"columns", r.columns},
           {"ambiguous_columns", r.ambiguous_columns}, {"witness", r.witness}};
}

void to_json(json& j, const ZeroColumnReport& r) {
  j = json{{"n", r.n},
           {"rows", r.rows},
           {"zero_column_stacks", r.zero_column_stacks},
           {"nonzero_stacks", r.nonzero_stacks},
           {"minimal_rows", r.minimal_rows}};
}

void to_json(json& j, const BijectionReport& r) {
  j = json{{"size", r.size},     {"domain", r.domain},         {"image", r.image},
           {"expected", r.expected}, {"functional", r.functional}, {"injective", r.injective},
           {"onto", r.onto}};
}

void to_json(json& j, const ColumnConstraint& c) {
  j = json{{"position", c.position}, {"allowed", alphabet_string(c.allowed)}};
}

void to_json(json& j, const ProbeResult& r) {
  json initial = json::array();
  for (const auto& w : r.initial) initial.push_back(json::array({row_string(w.row(0)), row_string(w.row(1))}));
  j = json{{"verdict", to_string(r.verdict)},
           {"depth", r.depth},
           {"width", r.width},
           {"origin", r.origin},
           {"constraints", r.constraints},
           {"scope", "relative to this window width and depth"},
           {"certificate", {{"initial_pairs", std::move(initial)}, {"trace", r.trace}, {"witness", rows_of(r.witness)}}}};
}

void to_json(json& j, const CertificateCheck& c) {
  j = json{{"initial_sound", c.initial_sound},
           {"initial_complete", c.initial_complete},
           {"trace_reproduced", c.trace_reproduced},
           {"witness_legal", c.witness_legal},
           {"ok", c.ok()}};
}

void to_json(json& j, const ShiftReport& r) {
  json bad = json::array();
  for (const auto& c : r.counterexamples)
    bad.push_back(json{{"xi", c.xi.str()}, {"step", c.step}, {"value", c.value.str()}});
  j = json{{"samples", r.samples}, {"vacuous", r.vacuous}, {"checked", r.checked}, {"counterexamples", std::move(bad)}};
}

json labeled_map(const Digraph& from, const Digraph& to, const std::vector<int>& map) {
  json m = json::object();
  for (std::size_t v = 0; v < map.size(); ++v) m[from.labels()[v]] = to.label(map[v]);
  return m;
}

std::string windows_csv(const std::vector<Window>& ws) {
  std::ostringstream s;
  int rows = ws.empty() ? 0 : ws[0].rows();
  s << "index,shear";
  for (int i = 0; i < rows; ++i) s << ",row" << i;
  s << '\n';
  for (std::size_t k = 0; k < ws.size(); ++k) {
    s << k << ',' << to_string(ws[k].shear());
    for (int i = 0; i < ws[k].rows(); ++i) s << ',' << row_string(ws[k].row(i));
    s << '\n';
  }
  return s.str();
}

std::string tables_csv(const std::vector<HTable>& ts) {
  std::ostringstream s;
  s << "table,side,row\n";
  for (std::size_t k = 0; k < ts.size(); ++k) {
    for (const auto& r : ts[k].tops) s << k << ",top," << row_string(r) << '\n';
    for (const auto& r : ts[k].bottoms) s << k << ",bottom," << row_string(r) << '\n';
  }
  return s.str();
}

std::string edges_csv(const Digraph& g) {
  std::ostringstream s;
  s << "source,target\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    for (int w : g.out(static_cast<int>(v))) s << g.labels()[v] << ',' << g.label(w) << '\n';
  return s.str();
}

std::string transitions_csv(const PartialAutomaton& a) { return transitions_text(a.delta, &a.labels); }
std::string transitions_csv(const Dfa& d) { return transitions_text(d.delta, nullptr); }

std::string summaries_csv(const std::vector<AutomatonSummary>& rows) {
  std::ostringstream s;
  s << "n,a_states,a_classes,folded_states,folded_classes,dfa_states,kernel_states,kernel_match,eta,theta\n";
  for (const auto& r : rows)
    s << r.n << ',' << r.a_states << ',' << r.a_classes << ',' << r.folded_states << ',' << r.folded_classes << ','
      << r.dfa_states << ',' << r.kernel_states << ',' << to_string(r.kernel_match) << ',' << r.eta << ','
      << r.theta << '\n';
  return s.str();
}

std::string probe_csv(const ProbeResult& r) {
  std::ostringstream s;
  s << "round,surviving_pairs\n";
  for (std::size_t k = 0; k < r.trace.size(); ++k) s << k << ',' << r.trace[k] << '\n';
  return s.str();
}

}  // namespace sesqui
