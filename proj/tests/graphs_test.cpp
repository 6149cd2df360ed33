#include <doctest.h>

#include <set>

#include "sesqui/graph.hpp"
#include "sesqui/tables.hpp"

using namespace sesqui;

namespace {

int vertex(const Digraph& g, const std::string& label) {
  auto v = g.find(label);
  REQUIRE(v);
  return *v;
}

}  // namespace

TEST_SUITE("pp-graphs") {
  TEST_CASE("S_1 is the 0235 one-column relation") {
    auto s = build_S(1);
    CHECK(s.size() == 8);
    std::set<std::pair<int, int>> got;
    for (const auto& w : s.members) got.insert({w.at(0, 0), w.at(1, 0)});
    std::set<std::pair<int, int>> want{{0, 0}, {0, 3}, {2, 0}, {2, 3}, {3, 2}, {3, 5}, {5, 2}, {5, 5}};
    CHECK(got == want);
  }

  TEST_CASE("S_n sizes") {
    CHECK(build_S(2).distinct_rows().size() == 16);
    CHECK(factor_h(build_S(3), Unique::Bottom).size() == 32);
  }

  TEST_CASE("G_n is two-regular with a zero loop") {
    for (int n = 2; n <= 4; ++n) {
      auto g = build_G(n);
      CHECK(g.size() == std::size_t{1} << (2 * n));
      CHECK(g.regular(2));
      CHECK(g.edge_count() == 2 * g.size());
      int z = vertex(g, std::string(static_cast<std::size_t>(n), '0'));
      CHECK(g.has_edge(z, z));
    }
  }

  TEST_CASE("Gamma_n") {
    auto g = build_Gamma(2);
    CHECK(g.size() == 16);
    CHECK(g.regular(2));
    int z = vertex(g, "000");
    CHECK(g.has_edge(z, z));
    CHECK(build_Gamma(3).size() == 64);
  }

  TEST_CASE("folds") {
    auto f = fold(build_G(2));
    CHECK(f.quotient.size() == 8);
    CHECK(f.pairs.size() == 8);
    for (int n = 2; n <= 5; ++n) {
      auto g = build_G(n);
      auto q = fold(g).quotient;
      CHECK(2 * q.edge_count() == g.edge_count());
    }
    for (int n = 3; n <= 5; ++n) {
      auto twice = fold(fold(build_G(n)).quotient).quotient;
      auto prev = build_G(n - 1);
      auto m = iso(twice, prev);
      REQUIRE(m);
      CHECK(is_isomorphism(twice, prev, *m));
    }
  }

  TEST_CASE("isomorphisms") {
    auto g = build_G(3);
    auto self = iso(g, g);
    REQUIRE(self);
    CHECK(is_isomorphism(g, g, *self));
    for (int n = 2; n <= 4; ++n) {
      auto gn = build_G(n);
      CHECK(iso(gn, build_Gamma(n)));
      CHECK(iso(gn, gn.reversed()));
    }
    // different edge counts
    auto h = g;
    h.remove_edge(0, g.out(0).front());
    CHECK_FALSE(iso(g, h));
  }

  TEST_CASE("dual relabeling") {
    for (int n = 2; n <= 4; ++n) CHECK(dual_automorphism(build_G(n)));
    auto g = build_G(2);
    CHECK(g.find("00"));
    CHECK(g.find("55"));
    auto h = g;
    int z = vertex(h, "00");
    h.remove_edge(z, z);
    CHECK_FALSE(dual_automorphism(h));
  }

  TEST_CASE("non-pairable graph") {
    Digraph g({"a", "b", "c"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    CHECK_THROWS_AS(fold(g), NotPairable);
  }

  TEST_CASE("dot output") {
    auto dot = to_dot(fold(build_G(2)).quotient, "rho");
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') > 8);
  }
}
