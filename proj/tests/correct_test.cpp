#include <doctest.h>

#include <set>

#include "sesqui/correct.hpp"

using namespace sesqui;

TEST_SUITE("correct-lang") {
  TEST_CASE("middle-left digit") {
    CHECK(L_triple(0, 0, 0) == Digit{0});
    int defined = 0;
    for (Digit a = 0; a < 6; ++a)
      for (Digit b = 0; b < 6; ++b)
        for (Digit c = 0; c < 6; ++c) {
          CHECK(L_witnesses(a, b, c) <= 1);
          defined += L_triple(a, b, c).has_value();
        }
    CHECK(defined == 84);
  }

  TEST_CASE("defined triples are the right columns of 3x2 windows") {
    std::set<Word> rights;
    for (const auto& w : enumerate_windows(3, 2, Shear::Straight)) rights.insert(w.rightmost_column());
    auto words = correct_words(3, kAllDigits);
    CHECK(std::set<Word>(words.begin(), words.end()) == rights);
    for (const auto& w : words) CHECK(L_triple(w[0], w[1], w[2]).has_value());
  }

  TEST_CASE("sliding image") {
    CHECK(L_word(Word(7, 0)) == Word(5, 0));
    CHECK_THROWS(L_word(Word(2, 0)));
    for (int len = 3; len <= 6; ++len)
      for (const auto& w : correct_words(len, kAllDigits)) {
        REQUIRE(L_word(w));
        if (len >= 5) CHECK(is_correct(*L_word(w)));
      }
  }

  TEST_CASE("correctness") {
    CHECK(is_correct(Word{}));
    for (int k = 0; k <= 12; ++k) CHECK(is_correct(Word(static_cast<std::size_t>(k), 0)));
    CHECK(correct_words(3, k0235).size() == 16);
    CHECK(closure_failures(3, 9) == 0);
  }

  TEST_CASE("0235 automata have two letters per state") {
    auto bu = build_correct_dfa(k0235, Reading::BottomUp);
    CHECK(bu.size() == 2);
    std::set<int> shapes;
    for (std::size_t s = 0; s < bu.size(); ++s) {
      int mask = 0;
      for (int d = 0; d < 6; ++d) mask |= (bu.delta[s][static_cast<std::size_t>(d)] != kNoState) << d;
      shapes.insert(mask);
    }
    CHECK(shapes == std::set<int>{0b000101, 0b101000});  // {0,2} and {3,5}

    auto td = build_correct_dfa(k0235, Reading::TopDown);
    shapes.clear();
    for (std::size_t s = 0; s < td.size(); ++s) {
      int mask = 0;
      for (int d = 0; d < 6; ++d) mask |= (td.delta[s][static_cast<std::size_t>(d)] != kNoState) << d;
      shapes.insert(mask);
    }
    CHECK(shapes == std::set<int>{0b001001, 0b100100});  // {0,3} and {2,5}
  }

  TEST_CASE("Z6 automaton accepts exactly the correct words") {
    CHECK(build_correct_dfa(kAllDigits, Reading::BottomUp).size() == 5);
    auto a = build_correct_dfa(kAllDigits, Reading::TopDown);
    CHECK(a.size() == 4);
    for (int len = 1; len <= 7; ++len) {
      auto words = correct_words(len, kAllDigits);
      std::size_t accepted = 0;
      Word w(static_cast<std::size_t>(len), 0);
      for (;;) {
        bool in = std::binary_search(words.begin(), words.end(), w);
        CHECK(a.accepts(w) == in);
        accepted += in;
        std::size_t k = 0;
        while (k < w.size() && ++w[k] == 6) w[k++] = 0;
        if (k == w.size()) break;
      }
      CHECK(accepted == words.size());
    }
  }

  TEST_CASE("local uniqueness") { CHECK(verify_local_uniqueness().ok()); }

  TEST_CASE("column lemmas at width 2, depth 6") {
    auto r = verify_column_lemmas(2, 6);
    // The unrestricted clause fails on the horizontal dead ends among the stacks.
    CHECK(r.count(column_clause::kRightCorrect) == 17424);
    CHECK(r.count(column_clause::kWindowRightCorrect) == 0);
    CHECK(r.count(column_clause::kLeftAmongRight) == 0);
    CHECK(r.count(column_clause::kNondeadend) == 0);
    CHECK(r.count(column_clause::kLeftmostCovers) == 0);
    CHECK(r.stacks_checked == 49104);
    CHECK(r.words_checked == 252);
  }

  TEST_CASE("leftmost columns") {
    CHECK(is_leftmost_column(Word(6, 0), 2));
    CHECK_THROWS_AS(is_leftmost_column(Word{0, 1, 0}, 2), std::invalid_argument);
  }
}
