#include <doctest.h>

#include <set>

#include "sesqui/automaton.hpp"

using namespace sesqui;

TEST_SUITE("pp-automata") {
  TEST_CASE("A_n has two letters per state") {
    for (int n = 2; n <= 4; ++n) {
      auto a = build_A(n);
      CHECK(a.size() == std::size_t{1} << (2 * n));
      for (std::size_t s = 0; s < a.size(); ++s) CHECK(a.letters_at(s) == 2);
    }
  }

  TEST_CASE("zero state") {
    auto a = build_A(2);
    REQUIRE(a.labels[0] == "00");
    CHECK(a.delta[0][0] == 0);
    // letters leaving the zero row: 0 (to itself) and 3 (to 30)
    std::set<int> letters;
    for (int d = 0; d < 6; ++d)
      if (a.delta[0][static_cast<std::size_t>(d)] != kNoState) letters.insert(d);
    CHECK(letters == std::set<int>{0, 3});
  }

  TEST_CASE("fold") {
    auto f = fold_A(build_A(2));
    CHECK(f.size() == 8);
    for (int n = 2; n <= 4; ++n) {
      auto g = fold_A(build_A(n));
      for (std::size_t s = 0; s < g.size(); ++s) CHECK(g.letters_at(s) == 2);
      CHECK(g.accepts(Word(20, 0)));
    }
  }

  TEST_CASE("language partitions") {
    for (int n = 2; n <= 4; ++n) {
      auto a = build_A(n);
      auto pa = language_partition(a);
      CHECK(std::set<int>(pa.begin(), pa.end()).size() == a.size() / 2);
      auto f = fold_A(a);
      auto pf = language_partition(f);
      CHECK(std::set<int>(pf.begin(), pf.end()).size() == f.size());
    }
    PartialAutomaton two;
    two.labels = {"x", "y"};
    two.delta = {Transitions{0, kNoState, kNoState, kNoState, kNoState, kNoState},
                 Transitions{kNoState, 1, kNoState, kNoState, kNoState, kNoState}};
    auto p = language_partition(two);
    CHECK(p[0] != p[1]);
  }

  TEST_CASE("minimal automaton sizes") {
    CHECK(determinize_minimize(build_A(2)).size() == 25);
    CHECK(determinize_minimize(build_A(3)).size() == 371);
    CHECK(determinize_minimize(build_A(4)).size() == 9069);
  }

  TEST_CASE("minimal automaton language") {
    auto a = build_A(3);
    auto d = determinize_minimize(a);
    CHECK(d.accepts(Word(20, 0)));
    Word w(6, 0);
    for (;;) {
      CHECK(d.accepts(w) == a.accepts(w));
      std::size_t k = 0;
      while (k < w.size() && ++w[k] == 6) w[k++] = 0;
      if (k == w.size()) break;
    }
  }

  TEST_CASE("kernel depths") {
    const int eta[] = {5, 11, 17};
    const int theta[] = {3, 6, 10};
    for (int n = 2; n <= 4; ++n) {
      auto d = determinize_minimize(build_A(n));
      auto k = kernel(d);
      CHECK(k.absorbing);
      CHECK(k.eta == eta[n - 2]);
      CHECK(k.theta == theta[n - 2]);
      CHECK(k.theta <= k.eta);
      CHECK(k.states.size() == (std::size_t{1} << (2 * n)) / 2);
    }
    CHECK(kernel(determinize_minimize(build_A(1))).theta == 1);
  }

  TEST_CASE("kernel is the folded automaton") {
    for (int n = 2; n <= 3; ++n) {
      auto s = summarize_automata(n);
      CHECK(s.kernel_match == KernelMatch::Folded);
      CHECK(s.kernel_states == s.folded_states);
    }
  }

  TEST_CASE("automaton isomorphism") {
    auto f = fold_A(build_A(2));
    CHECK(automaton_iso(f, f));
    CHECK_FALSE(automaton_iso(f, build_A(2)));
  }
}
