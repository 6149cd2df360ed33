#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "manifest.hpp"
#include "sesqui/automaton.hpp"
#include "sesqui/checks.hpp"
#include "sesqui/enumerate.hpp"
#include "sesqui/graph.hpp"
#include "sesqui/parallel.hpp"
#include "sesqui/serialize.hpp"
#include "sesqui/tables.hpp"
#include "sesqui/zprobe.hpp"

#ifndef SESQUI_VERSION
#define SESQUI_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sesqui;
using sesqui::cli::RunManifest;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Safe defaults; larger requests are refused.
constexpr int kMaxRows = 7;
constexpr int kMaxCols = 8;
constexpr int kMaxTableWidth = 6;
constexpr int kMaxGraphWidth = 6;
constexpr int kMaxAutomatonWidth = 5;
constexpr int kMaxExportWidth = 5;
constexpr int kMaxHorizon = 200;
constexpr std::size_t kMaxSamples = 1000000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Payload {
  json result = json::object();
  std::string text;            // csv / dot / plain report
  json timings = nullptr;      // reported, kept out of the digest
  bool failed = false;
};

struct OutputOptions {
  std::string format = "json";
  std::string path;
  std::string manifest_path;
};

void add_output(CLI::App* cmd, OutputOptions& o, std::vector<std::string> formats) {
  o.format = formats.front();
  cmd->add_option("-f,--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  cmd->add_option("-o,--output", o.path, "Write to a file instead of stdout");
  cmd->add_option("--manifest", o.manifest_path, "Also write the run manifest to this file");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  if (auto dir = fs::path(path).parent_path(); !dir.empty()) fs::create_directories(dir);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

json shear_variant(Shear s) {
  json v{{"shear", to_string(s)}};
  if (s != Shear::Straight) v["orientation"] = kShearOrientation;
  return v;
}

std::size_t distinct_rows(const std::vector<Window>& ws) {
  std::vector<Word> rows;
  for (const auto& w : ws)
    for (int i = 0; i < w.rows(); ++i) rows.push_back(w.row(i));
  sort_unique(rows);
  return rows.size();
}

// --- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  int n = 0, m = 0;
  std::string shear = "straight";
  std::size_t max_states = EnumerationLimits{}.max_product_states;
};

Payload run_enumerate(const EnumerateArgs& a, const OutputOptions& o) {
  EnumerationLimits limits;
  limits.max_product_states = a.max_states;
  Shear s = *parse_shear(a.shear);
  auto ws = enumerate_windows(a.n, a.m, s, limits);
  std::size_t distinct = distinct_rows(ws);
  Payload p;
  json windows = json::array();
  for (const auto& w : ws) windows.push_back(json(w)["rows"]);
  p.result = json{{"rows", a.n}, {"cols", a.m}, {"shear", a.shear}, {"count", ws.size()},
                  {"distinct_rows", distinct}, {"windows", std::move(windows)}};
  if (o.format == "csv") p.text = windows_csv(ws);
  return p;
}

// --- tables ---------------------------------------------------------------

struct TablesArgs {
  int n = 0;
  std::string shear = "straight";
  bool only_0235 = false;
  bool split = false;
  bool vertical = false;
  std::string unique = "bottom";
};

Payload run_tables(const TablesArgs& a, const OutputOptions& o) {
  Shear s = *parse_shear(a.shear);
  PairSet pairs = a.only_0235 ? pair_family_0235(a.n, s) : pair_family(a.n, s);
  Payload p;
  if (a.vertical) {
    auto vt = factor_v(pairs);
    p.result = json{{"n", a.n}, {"shear", a.shear}, {"rightmost_0235", a.only_0235}, {"vertical_tables", vt}};
    if (o.format == "csv") {
      std::ostringstream s;
      s << "table,side,column\n";
      for (std::size_t k = 0; k < vt.size(); ++k) {
        for (const auto& c : vt[k].lefts) s << k << ",left," << column_string(c) << '\n';
        for (const auto& c : vt[k].rights) s << k << ",right," << column_string(c) << '\n';
      }
      p.text = s.str();
    }
    return p;
  }
  auto tables = factor_h(pairs, a.unique == "top" ? Unique::Top : Unique::Bottom);
  if (a.split) tables = split_h14(tables, s);
  auto report = verify_family_structure(pairs, a.only_0235);
  p.result = json{{"n", a.n},          {"shear", a.shear},          {"rightmost_0235", a.only_0235},
                  {"unique", a.unique}, {"split", a.split},          {"tables", tables},
                  {"report", report}};
  if (o.format == "csv") p.text = tables_csv(tables);
  return p;
}

// --- graph ----------------------------------------------------------------

struct GraphArgs {
  int n = 0;
  std::string kind = "G";
  std::string shear = "up";
};

json iso_entry(const Digraph& a, const Digraph& b) {
  auto m = iso(a, b);
  if (!m || !is_isomorphism(a, b, *m)) return nullptr;
  return labeled_map(a, b, *m);
}

Payload run_graph(const GraphArgs& a, const OutputOptions& o) {
  Shear s = *parse_shear(a.shear);
  Payload p;
  Digraph g;
  json extra = json::object();
  if (a.kind == "Gamma") {
    if (a.n < 2) throw UsageError("Gamma needs n >= 2");
    g = build_Gamma(a.n);
  } else {
    Digraph base = build_G(a.n, s);
    if (a.kind == "G") {
      g = base;
      if (a.n >= 2) extra["isomorphism_to_Gamma"] = iso_entry(g, build_Gamma(a.n));
      extra["isomorphism_to_reverse"] = iso_entry(g, g.reversed());
      extra["dual_automorphism"] = dual_automorphism(g);
    } else {
      auto f = fold(base);
      if (a.kind == "rho") {
        g = f.quotient;
        extra["fold"] = f;
      } else {
        auto f2 = fold(f.quotient);
        g = f2.quotient;
        if (a.n >= 2) extra["isomorphism_to_previous_width"] = iso_entry(g, build_G(a.n - 1, s));
      }
    }
  }
  p.result = json{{"n", a.n}, {"kind", a.kind}, {"vertex_count", g.size()}, {"graph", g}};
  p.result.update(extra);
  if (o.format == "dot") p.text = to_dot(g, a.kind + "_n" + std::to_string(a.n));
  if (o.format == "csv") p.text = edges_csv(g);
  return p;
}

// --- automaton ------------------------------------------------------------

struct AutomatonArgs {
  int n = 0;
  std::string kind = "A";
  int through = 0;
};

Payload run_automaton(const AutomatonArgs& a, const OutputOptions& o) {
  Payload p;
  std::string name = a.kind + std::to_string(a.n);
  if (a.kind == "summary") {
    int last = a.through ? a.through : a.n;
    if (last < a.n || last > kMaxAutomatonWidth) throw UsageError("--through must lie in [n, 5]");
    std::vector<AutomatonSummary> rows;
    for (int n = a.n; n <= last; ++n) rows.push_back(summarize_automata(n));
    p.result = json{{"summaries", rows}};
    if (o.format == "csv") p.text = summaries_csv(rows);
    if (o.format == "dot") throw UsageError("summary has no dot form");
    return p;
  }
  auto A = build_A(a.n);
  if (a.kind == "A" || a.kind == "rhoA") {
    auto x = a.kind == "A" ? A : fold_A(A);
    auto part = language_partition(x);
    p.result = json{{"n", a.n}, {"kind", a.kind}, {"automaton", x}, {"language_classes", part}};
    if (o.format == "dot") p.text = to_dot(x, name);
    if (o.format == "csv") p.text = transitions_csv(x);
    return p;
  }
  auto d = determinize_minimize(A);
  auto k = kernel(d);
  if (a.kind == "D") {
    p.result = json{{"n", a.n}, {"kind", a.kind}, {"dfa", d}, {"kernel", k}};
    if (o.format == "dot") p.text = to_dot(d, name);
    if (o.format == "csv") p.text = transitions_csv(d);
    return p;
  }
  auto ka = kernel_automaton(d, k);
  auto s = summarize_automata(a.n);
  p.result = json{{"n", a.n}, {"kind", a.kind}, {"kernel", k}, {"automaton", ka},
                  {"isomorphic_to", to_string(s.kernel_match)}};
  if (auto m = automaton_iso(ka, fold_A(A))) p.result["isomorphism_to_rhoA"] = *m;
  if (o.format == "dot") p.text = to_dot(ka, name);
  if (o.format == "csv") p.text = transitions_csv(ka);
  return p;
}

// --- probe ----------------------------------------------------------------

struct ProbeArgs {
  int width = 0;
  int depth = 8;
  std::optional<int> origin;
  std::vector<std::string> columns;
  std::vector<std::string> alphabets;
  std::size_t samples = 0;
  int horizon = 40;
  std::uint64_t seed = 1;
};

std::vector<ColumnConstraint> constraints_of(const ProbeArgs& a) {
  std::vector<ColumnConstraint> out;
  std::size_t next_alphabet = 0;
  for (const auto& c : a.columns) {
    if (c.find(':') != std::string::npos) {
      out.push_back(parse_constraint(c));
      continue;
    }
    if (next_alphabet >= a.alphabets.size()) throw UsageError("--column " + c + " has no matching --alphabet");
    out.push_back(parse_constraint(c + ":" + a.alphabets[next_alphabet++]));
  }
  if (next_alphabet != a.alphabets.size()) throw UsageError("more --alphabet than --column values");
  return out;
}

Payload run_probe(const ProbeArgs& a, const OutputOptions& o) {
  if (a.width == 0 && a.samples == 0) throw UsageError("probe needs --width or --samples");
  Payload p;
  std::ostringstream csv;
  if (a.width > 0) {
    auto cs = constraints_of(a);
    auto r = emptiness_probe(cs, a.depth, a.width, a.origin);
    auto v = verify_certificate(r);
    p.result["probe"] = r;
    p.result["certificate_check"] = v;
    p.failed |= !v.ok();
    csv << probe_csv(r);
  }
  if (a.samples > 0) {
    auto xs = sample_xi(a.samples, a.horizon, a.seed);
    auto r = verify_sixth_shift(xs, a.horizon);
    p.result["sweep"] = json{{"seed", a.seed}, {"horizon", a.horizon}, {"report", r}};
    p.failed |= !r.ok();
    csv << "samples,vacuous,checked,counterexamples\n"
        << r.samples << ',' << r.vacuous << ',' << r.checked << ',' << r.counterexamples.size() << '\n';
  }
  if (o.format == "csv") p.text = csv.str();
  return p;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string scope = "all";
  int jobs = 1;
  bool list = false;
};

std::string csv_field(const std::string& s) {
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

Payload run_verify(const VerifyArgs& a, const OutputOptions& o) {
  auto checks = select_checks(a.scope);
  Payload p;
  if (a.list) {
    std::ostringstream s;
    json list = json::array();
    for (const auto* c : checks) {
      s << c->group << '\t' << c->id << '\t' << c->parameters << '\n';
      list.push_back(json{{"id", c->id}, {"group", c->group}, {"topic", c->topic}, {"parameters", c->parameters}});
    }
    p.result = json{{"checks", list}};
    if (o.format != "json") p.text = s.str();
    return p;
  }
  auto outcomes = run_checks(checks, a.jobs);
  p.result = to_report(outcomes);
  json timings = json::object();
  for (auto& c : p.result["checks"]) {
    timings[c["id"].get<std::string>()] = c["seconds"];
    c.erase("seconds");
  }
  p.timings = timings;
  json failed = json::array();
  std::ostringstream s;
  if (o.format == "csv") s << "id,group,passed,seconds,summary\n";
  for (const auto& out : outcomes) {
    if (!out.passed()) failed.push_back(out.check->id);
    std::string summary = out.error.empty() ? out.result.summary : "error: " + out.error;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", out.seconds);
    if (o.format == "csv")
      s << out.check->id << ',' << out.check->group << ',' << (out.passed() ? "true" : "false") << ',' << secs << ','
        << csv_field(summary) << '\n';
    else
      s << (out.passed() ? "PASS " : "FAIL ") << out.check->id << " [" << out.check->parameters << "] " << summary
        << " (" << secs << "s)\n";
  }
  if (o.format == "text") s << outcomes.size() - failed.size() << " of " << outcomes.size() << " checks passed\n";
  if (o.format != "json") p.text = s.str();
  if (!failed.empty()) {
    p.failed = true;
    std::cerr << json{{"failed", failed}}.dump() << '\n';
  }
  return p;
}

// --- export ---------------------------------------------------------------

struct ExportArgs {
  std::string dir;
  int max_n = 4;
};

Payload run_export(const ExportArgs& a) {
  json files = json::array();
  auto put = [&](const std::string& rel, const std::string& text) {
    write_text((fs::path(a.dir) / rel).string(), text);
    files.push_back(json{{"path", rel}, {"sha256", cli::sha256_hex(text)}});
  };
  for (int n = 2; n <= a.max_n; ++n) {
    std::string sn = std::to_string(n);
    for (Shear s : {Shear::Straight, Shear::Up, Shear::Down}) {
      std::string name(to_string(s));
      for (bool z : {false, true}) {
        auto pairs = z ? pair_family_0235(n, s) : pair_family(n, s);
        std::string stem = name + (z ? "_0235" : "") + "_n" + sn;
        put("families/" + stem + ".csv", windows_csv(pairs.members));
        json t{{"tables", factor_h(pairs, Unique::Bottom)}, {"report", verify_family_structure(pairs, z)}};
        put("tables/" + stem + ".json", t.dump(1) + "\n");
      }
    }
    auto g = build_G(n);
    auto f = fold(g);
    auto f2 = fold(f.quotient);
    auto gamma = build_Gamma(n);
    put("graphs/G_n" + sn + ".dot", to_dot(g, "G" + sn));
    put("graphs/Gamma_n" + sn + ".dot", to_dot(gamma, "Gamma" + sn));
    put("graphs/rho_n" + sn + ".dot", to_dot(f.quotient, "rho" + sn));
    put("graphs/rho2_n" + sn + ".dot", to_dot(f2.quotient, "rho2_" + sn));
    json isos{{"n", n},
              {"G_to_Gamma", iso_entry(g, gamma)},
              {"G_to_reverse", iso_entry(g, g.reversed())},
              {"dual_automorphism", dual_automorphism(g)},
              {"fold", f}};
    if (n >= 3) isos["rho2_to_previous_width"] = iso_entry(f2.quotient, build_G(n - 1));
    put("graphs/bijections_n" + sn + ".json", isos.dump(1) + "\n");
    auto A = automaton_from_graph(g);
    put("automata/A_n" + sn + ".dot", to_dot(A, "A" + sn));
    put("automata/rhoA_n" + sn + ".dot", to_dot(fold_A(A), "rhoA" + sn));
    put("automata/D_n" + sn + ".csv", transitions_csv(determinize_minimize(A)));
  }
  std::vector<AutomatonSummary> rows;
  for (int n = 2; n <= a.max_n; ++n) rows.push_back(summarize_automata(n));
  put("automata/eta_theta.csv", summaries_csv(rows));
  Payload p;
  p.result = json{{"dir", a.dir}, {"max_n", a.max_n}, {"files", files}};
  return p;
}

// Runs a command, writes its output and manifest.
int finish(const std::string& subcommand, const json& parameters, const json& variant, const OutputOptions& o,
           const std::function<Payload()>& body) {
  auto start = std::chrono::steady_clock::now();
  Payload p = body();
  RunManifest m;
  m.tool_version = SESQUI_VERSION;
  m.subcommand = subcommand;
  m.parameters = parameters;
  m.variant = variant;
  m.variant["threads"] = default_threads();
  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool as_json = o.format == "json" || p.text.empty();
  m.digest = cli::sha256_hex(as_json ? p.result.dump() : p.text);
  if (as_json) {
    json doc{{"manifest", m.to_json()}, {"result", p.result}};
    if (!p.timings.is_null()) doc["timings"] = p.timings;
    write_text(o.path, doc.dump(1) + "\n");
  } else {
    write_text(o.path, p.text);
  }
  if (!o.manifest_path.empty()) write_text(o.manifest_path, m.to_json().dump(1) + "\n");
  return p.failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive computations on base-6 words whose rows grow by 3/2"};
  app.set_version_flag("--version", std::string(SESQUI_VERSION));
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: SESQUI_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  std::function<int()> action;

  EnumerateArgs ea;
  OutputOptions eo;
  auto* enumerate = app.add_subcommand("enumerate", "Windows n x m occurring in the 2-D words of a family");
  enumerate->add_option("n", ea.n, "Rows")->required()->check(CLI::Range(1, kMaxRows));
  enumerate->add_option("m", ea.m, "Columns")->required()->check(CLI::Range(1, kMaxCols));
  enumerate->add_option("shear", ea.shear, "straight | up | down")
      ->check(CLI::IsMember({"straight", "up", "down"}))
      ->capture_default_str();
  enumerate->add_option("--max-states", ea.max_states, "Bound on product states")->capture_default_str();
  add_output(enumerate, eo, {"json", "csv"});
  enumerate->callback([&] {
    action = [&] {
      return finish("enumerate", {{"n", ea.n}, {"m", ea.m}, {"shear", ea.shear}, {"max_states", ea.max_states}},
                    shear_variant(*parse_shear(ea.shear)), eo, [&] { return run_enumerate(ea, eo); });
    };
  });

  TablesArgs ta;
  OutputOptions to;
  auto* tables = app.add_subcommand("tables", "Factor the 2 x n pair family into tables");
  tables->add_option("n", ta.n, "Width")->required()->check(CLI::Range(1, kMaxTableWidth));
  tables->add_option("--shear", ta.shear, "straight | up | down")
      ->check(CLI::IsMember({"straight", "up", "down"}))
      ->capture_default_str();
  tables->add_flag("--0235", ta.only_0235, "Keep pairs whose rightmost column avoids 1 and 4");
  tables->add_flag("--split", ta.split, "Split six-row tables into three-row ones");
  tables->add_flag("--vertical", ta.vertical, "Factor by columns instead of rows");
  tables->add_option("--unique", ta.unique, "Side with one row per table")
      ->check(CLI::IsMember({"top", "bottom"}))
      ->capture_default_str();
  add_output(tables, to, {"json", "csv"});
  tables->callback([&] {
    action = [&] {
      json params{{"n", ta.n}, {"shear", ta.shear}, {"0235", ta.only_0235}, {"split", ta.split},
                  {"vertical", ta.vertical}, {"unique", ta.unique}};
      return finish("tables", params, shear_variant(*parse_shear(ta.shear)), to, [&] { return run_tables(ta, to); });
    };
  });

  GraphArgs ga;
  OutputOptions go;
  auto* graph = app.add_subcommand("graph", "Row graphs G_n, correct-column graphs Gamma_n and their folds");
  graph->add_option("n", ga.n, "Width")->required()->check(CLI::Range(1, kMaxGraphWidth));
  graph->add_option("kind", ga.kind, "G | Gamma | rho | rho2")
      ->check(CLI::IsMember({"G", "Gamma", "rho", "rho2"}))
      ->capture_default_str();
  graph->add_option("--shear", ga.shear, "Family of the pairs")
      ->check(CLI::IsMember({"straight", "up", "down"}))
      ->capture_default_str();
  add_output(graph, go, {"dot", "json", "csv"});
  graph->callback([&] {
    action = [&] {
      return finish("graph", {{"n", ga.n}, {"kind", ga.kind}, {"shear", ga.shear}},
                    shear_variant(*parse_shear(ga.shear)), go, [&] { return run_graph(ga, go); });
    };
  });

  AutomatonArgs aa;
  OutputOptions ao;
  auto* automaton = app.add_subcommand("automaton", "Automata A_n, their folds, minimal automata and kernels");
  automaton->add_option("n", aa.n, "Width")->required()->check(CLI::Range(1, kMaxAutomatonWidth));
  automaton->add_option("kind", aa.kind, "A | rhoA | D | kernel | summary")
      ->check(CLI::IsMember({"A", "rhoA", "D", "kernel", "summary"}))
      ->capture_default_str();
  automaton->add_option("--through", aa.through, "Last width of a summary table");
  add_output(automaton, ao, {"json", "csv", "dot"});
  automaton->callback([&] {
    action = [&] {
      return finish("automaton", {{"n", aa.n}, {"kind", aa.kind}, {"through", aa.through}},
                    shear_variant(kSelectedShear), ao, [&] { return run_automaton(aa, ao); });
    };
  });

  ProbeArgs pa;
  OutputOptions po;
  auto* probe = app.add_subcommand("probe", "Emptiness probes under column constraints; sixth-shift sweeps");
  probe->add_option("--width", pa.width, "Window width")->check(CLI::Range(1, kMaxProbeWidth));
  probe->add_option("--depth", pa.depth, "Pruning rounds")->check(CLI::Range(0, kMaxProbeDepth))->capture_default_str();
  probe->add_option("--origin", pa.origin, "Position of the rightmost window column");
  probe->add_option("--column", pa.columns, "Column position (0 units, -1 first fractional), or POS:DIGITS")
      ->allow_extra_args(false);
  probe->add_option("--alphabet", pa.alphabets, "Allowed digits for the matching --column")->allow_extra_args(false);
  probe->add_option("--samples", pa.samples, "Seeded samples for the sixth-shift sweep")
      ->check(CLI::Range(std::size_t{0}, kMaxSamples));
  probe->add_option("--horizon", pa.horizon, "Powers of 3/2 checked per sample")
      ->check(CLI::Range(0, kMaxHorizon))
      ->capture_default_str();
  probe->add_option("--seed", pa.seed, "Sampling seed")->capture_default_str();
  add_output(probe, po, {"json", "csv"});
  probe->callback([&] {
    action = [&] {
      json params{{"width", pa.width}, {"depth", pa.depth}, {"columns", pa.columns}, {"alphabets", pa.alphabets},
                  {"samples", pa.samples}, {"horizon", pa.horizon}, {"seed", pa.seed}};
      if (pa.origin) params["origin"] = *pa.origin;
      return finish("probe", params, shear_variant(Shear::Straight), po, [&] { return run_probe(pa, po); });
    };
  });

  VerifyArgs va;
  OutputOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the registered checks");
  verify->add_option("scope", va.scope, "all, a group or a check id")->capture_default_str();
  verify->add_option("--jobs", va.jobs, "Checks run at once")->check(CLI::Range(1, 256))->capture_default_str();
  verify->add_flag("--list", va.list, "List the selected checks without running them");
  add_output(verify, vo, {"text", "json", "csv"});
  verify->callback([&] {
    action = [&] {
      return finish("verify", {{"scope", va.scope}, {"list", va.list}}, shear_variant(kSelectedShear), vo,
                    [&] { return run_verify(va, vo); });
    };
  });

  ExportArgs xa;
  auto* exporter = app.add_subcommand("export", "Write families, tables, graphs and automata to a directory");
  exporter->add_option("dir", xa.dir, "Output directory")->required();
  exporter->add_option("--max-n", xa.max_n, "Largest width")->check(CLI::Range(2, kMaxExportWidth))->capture_default_str();
  exporter->callback([&] {
    action = [&] {
      OutputOptions o;
      o.path = (fs::path(xa.dir) / "manifest.json").string();
      int rc = finish("export", {{"dir", xa.dir}, {"max_n", xa.max_n}}, shear_variant(kSelectedShear), o,
                      [&] { return run_export(xa); });
      std::cout << o.path << '\n';
      return rc;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (threads > 0) setenv("SESQUI_THREADS", std::to_string(threads).c_str(), 1);
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownScope& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
