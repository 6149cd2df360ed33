#include <doctest.h>

#include <set>

#include "sesqui/checks.hpp"
#include "sesqui/serialize.hpp"

using namespace sesqui;

TEST_SUITE("serialize") {
  TEST_CASE("windows and pair sets") {
    Window w({parse_row("12"), parse_row("45")});
    json j = w;
    CHECK(j["rows"] == json::array({"12", "45"}));
    CHECK(j["shear"] == "straight");
    json p = pair_family(1, Shear::Up);
    CHECK(p["count"] == 24);
    CHECK(p["orientation"] == "transpose");
    CHECK(windows_csv({w}) == "index,shear,row0,row1\n0,straight,12,45\n");
  }

  TEST_CASE("graphs") {
    auto g = build_G(2);
    json j = g;
    CHECK(j["vertices"].size() == 16);
    CHECK(j["edge_count"] == 32);
    auto csv = edges_csv(g);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 33);
    auto m = iso(g, g.reversed());
    REQUIRE(m);
    CHECK(labeled_map(g, g.reversed(), *m).size() == 16);
  }

  TEST_CASE("automata") {
    json a = build_A(2);
    CHECK(a["states"].size() == 16);
    CHECK(a["transitions"][0]["0"] == "00");
    auto rows = std::vector<AutomatonSummary>{summarize_automata(2)};
    CHECK(summaries_csv(rows) ==
          "n,a_states,a_classes,folded_states,folded_classes,dfa_states,kernel_states,kernel_match,eta,theta\n"
          "2,16,8,8,8,25,8,folded,5,3\n");
  }

  TEST_CASE("probe results embed their certificate") {
    auto r = emptiness_probe(std::vector<ColumnConstraint>{parse_constraint("0:023"), parse_constraint("1:45")}, 8, 2, 0);
    json j = r;
    CHECK(j["verdict"] == "empty");
    CHECK(j["certificate"]["trace"] == json::array({3, 1, 0}));
    CHECK(j["certificate"]["initial_pairs"].size() == 3);
    CHECK(probe_csv(r) == "round,surviving_pairs\n0,3\n1,1\n2,0\n");
  }

  TEST_CASE("output is stable") {
    CHECK(json(build_G(3)).dump() == json(build_G(3)).dump());
  }
}

TEST_SUITE("checks") {
  TEST_CASE("registry") {
    const auto& r = check_registry();
    CHECK(r.size() >= 40);
    std::set<std::string> ids;
    for (const auto& c : r) ids.insert(c.id);
    CHECK(ids.size() == r.size());
    CHECK(select_checks("all").size() == r.size());
    auto graphs = select_checks("graphs");
    CHECK(graphs.size() == 6);
    for (const auto* c : graphs) CHECK(c->group == "graphs");
    CHECK(select_checks("operator-closure").size() == 1);
    CHECK_THROWS_AS(select_checks("bogus-id"), UnknownScope);
  }

  TEST_CASE("running a group") {
    auto out = run_checks(select_checks("operator"), 2);
    REQUIRE(out.size() == 4);
    for (const auto& o : out) CHECK(o.passed());
    auto report = to_report(out);
    CHECK(report["failed"] == 0);
    CHECK(report["checks"][0]["id"] == "middle-left-digit-is-a-function");
  }
}
