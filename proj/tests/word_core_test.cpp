#include <doctest.h>

#include <set>

#include "sesqui/carry.hpp"
#include "sesqui/enumerate.hpp"
#include "sesqui/join.hpp"

using namespace sesqui;

TEST_SUITE("word-core") {
  TEST_CASE("carry step") {
    CHECK(carry_step({0, 0}, 0, 0) == CarryState{0, 0});
    CHECK(carry_step({0, 0}, 2, 3) == CarryState{1, 1});
    for (Digit b = 0; b < 6; ++b) CHECK_FALSE(carry_step({0, 0}, 1, b));
  }

  TEST_CASE("every carry state is recurrent") {
    auto r = recurrent_carry_states();
    CHECK(r.size() == 6);
    CHECK(std::find(r.begin(), r.end(), CarryState{1, 1}) != r.end());
  }

  TEST_CASE("rows times three halves") {
    CHECK(number_string(mul_row_3_2(parse_number("0"))) == "0");
    CHECK(number_string(mul_row_3_2(parse_number("10"))) == "13");
    CHECK(number_string(mul_row_3_2(parse_number("3"))) == "4.3");
  }

  TEST_CASE("window counts") {
    CHECK(enumerate_windows(1, 1, Shear::Straight).size() == 6);
    CHECK(enumerate_windows(2, 1, Shear::Straight).size() == 24);
    CHECK(enumerate_windows(3, 1, Shear::Straight).size() == 84);
    CHECK(enumerate_windows(2, 2, Shear::Straight).size() == 144);
    CHECK(enumerate_windows(3, 2, Shear::Straight).size() == 504);
    CHECK(enumerate_windows(2, 3, Shear::Straight).size() == 864);
    CHECK(enumerate_windows(4, 1, Shear::Straight).size() == 276);
  }

  TEST_CASE("one-column pairs") {
    // tops {0,2,4} over {0,3}, {1,3,5} over {2,5}, anything over {1,4}
    std::set<std::pair<int, int>> got;
    for (const auto& w : enumerate_windows(2, 1, Shear::Straight)) got.insert({w.at(0, 0), w.at(1, 0)});
    std::set<std::pair<int, int>> want;
    for (int a = 0; a < 6; ++a) {
      for (int b : a % 2 == 0 ? std::vector{0, 3} : std::vector{2, 5}) want.insert({a, b});
      want.insert({a, 1});
      want.insert({a, 4});
    }
    CHECK(got == want);
  }

  TEST_CASE("two by two windows have 36 distinct rows") {
    std::set<Word> rows;
    for (const auto& w : enumerate_windows(2, 2, Shear::Straight)) {
      rows.insert(w.row(0));
      rows.insert(w.row(1));
    }
    CHECK(rows.size() == 36);
  }

  TEST_CASE("sheared pair counts") {
    CHECK(pair_family(2, Shear::Up).size() == 96);
    CHECK(pair_family(3, Shear::Up).size() == 384);
    CHECK(pair_family(2, Shear::Down).size() == 216);
    CHECK(pair_family(3, Shear::Down).size() == 1944);
  }

  TEST_CASE("trapezoid oracle") {
    Word zeros(7, 0);
    CHECK(trapezoid_oracle(zeros, 4).is_zero());
    // top 0000100 (six at position 2) -> 13 (nine)
    Word top = parse_row("0000100");
    auto core = trapezoid_oracle(top, 2);
    CHECK(row_string(core.row(0)) == "00010");
    CHECK(row_string(core.row(1)) == "00013");
    CHECK_THROWS_AS(trapezoid_oracle(Word(3, 0), 3), std::invalid_argument);
  }

  TEST_CASE("transducer agrees with trapezoids") {
    CHECK(enumerate_windows(2, 2, Shear::Straight) == oracle_windows(2, 2));
    CHECK(enumerate_windows(3, 2, Shear::Straight) == oracle_windows(3, 2));
  }

  TEST_CASE("dual") {
    CHECK(dual(parse_row("013")) == parse_row("542"));
    auto ws = enumerate_windows(2, 2, Shear::Straight);
    std::vector<Window> ds;
    for (const auto& w : ws) {
      CHECK(dual(dual(w)) == w);
      ds.push_back(dual(w));
    }
    sort_unique(ds);
    CHECK(ds == ws);
  }

  TEST_CASE("overlap joins") {
    // digits shifted down by one to stay in Z6
    Window u({parse_row("01"), parse_row("34")});
    Window v({parse_row("12"), parse_row("45")});
    auto h = hjoin(u, v);
    REQUIRE(h);
    CHECK(row_string(h->row(0)) == "012");
    CHECK(row_string(h->row(1)) == "345");

    Window lower({parse_row("23"), parse_row("45")});
    Window upper({parse_row("01"), parse_row("23")});
    auto s = vjoin(lower, upper);
    REQUIRE(s);
    CHECK(s->rows() == 3);
    CHECK(row_string(s->row(0)) == "01");
    CHECK(row_string(s->row(2)) == "45");

    CHECK_FALSE(hjoin(u, u));
    Window same({parse_row("11"), parse_row("44")});
    CHECK(hjoin(same, same));
  }

  TEST_CASE("dead ends") {
    auto ws = enumerate_windows(2, 2, Shear::Straight);
    CHECK(nondeadend(ws, Axis::Horizontal) == ws);
    CHECK(nondeadend(ws, Axis::Vertical) == ws);
    CHECK(nondeadend(std::vector<Window>{}, Axis::Horizontal).empty());
    // stacks of two 2x2 pairs: the horizontal dead ends are exactly the non-windows
    auto stacks = vjoin(ws, ws);
    CHECK(stacks.size() == 576);
    CHECK(nondeadend(stacks, Axis::Horizontal) == enumerate_windows(3, 2, Shear::Straight));
  }

  TEST_CASE("bounds") {
    EnumerationLimits tight;
    tight.max_product_states = 36;
    CHECK_THROWS_AS(enumerate_windows(4, 2, Shear::Straight, tight), BoundExceeded);
  }
}
