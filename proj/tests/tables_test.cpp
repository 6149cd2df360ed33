#include <doctest.h>

#include "sesqui/tables.hpp"

using namespace sesqui;

namespace {

std::vector<std::string> strings(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(row_string(w));
  return out;
}

}  // namespace

TEST_SUITE("table-factor") {
  TEST_CASE("one-column pairs factor into three tables") {
    auto tables = factor_h(pair_family(1, Shear::Straight), Unique::Bottom);
    REQUIRE(tables.size() == 3);
    using V = std::vector<std::string>;
    CHECK(strings(tables[0].tops) == V{"0", "1", "2", "3", "4", "5"});
    CHECK(strings(tables[0].bottoms) == V{"1", "4"});
    CHECK(strings(tables[1].tops) == V{"0", "2", "4"});
    CHECK(strings(tables[1].bottoms) == V{"0", "3"});
    CHECK(strings(tables[2].tops) == V{"1", "3", "5"});
    CHECK(strings(tables[2].bottoms) == V{"2", "5"});
  }

  TEST_CASE("straight 2x2 family: 18 tables, 12 narrow and 6 wide") {
    auto tables = factor_h(pair_family(2, Shear::Straight), Unique::Bottom);
    CHECK(tables.size() == 18);
    auto narrow = std::count_if(tables.begin(), tables.end(), [](const HTable& t) { return t.tops.size() == 3; });
    auto wide = std::count_if(tables.begin(), tables.end(), [](const HTable& t) { return t.tops.size() == 6; });
    CHECK(narrow == 12);
    CHECK(wide == 6);
    CHECK(split_h14(tables, Shear::Straight).size() == 24);
  }

  TEST_CASE("sheared 2x2 family splits into 16 tables") {
    auto tables = factor_h(pair_family(2, Shear::Up), Unique::Bottom);
    CHECK(tables.size() == 12);
    CHECK(split_h14(tables, Shear::Up).size() == 16);
  }

  TEST_CASE("factorization is sound and bottoms partition") {
    for (Shear s : {Shear::Straight, Shear::Up, Shear::Down}) {
      auto pairs = pair_family(3, s);
      auto tables = factor_h(pairs, Unique::Bottom);
      CHECK(expand(tables, s) == pairs.members);
      std::size_t bottoms = 0;
      for (const auto& t : tables) bottoms += t.bottoms.size();
      CHECK(bottoms == pairs.bottom_rows().size());
    }
  }

  TEST_CASE("empty input") {
    PairSet none{Axis::Horizontal, 2, Shear::Straight, {}};
    CHECK(factor_h(none, Unique::Bottom).empty());
    PairSet vnone{Axis::Vertical, 2, Shear::Straight, {}};
    CHECK(factor_v(vnone).empty());
    auto pure = factor_h(pair_family_0235(2, Shear::Up), Unique::Bottom);
    CHECK(split_h14(pure, Shear::Up) == pure);
  }

  TEST_CASE("vertical tables of 3x2 windows with a 0235 left column") {
    std::vector<Window> ws;
    for (const auto& w : enumerate_windows(3, 2, Shear::Straight))
      if (all_in(w.leftmost_column(), k0235)) ws.push_back(w);
    auto tables = factor_v(PairSet::make(Axis::Vertical, Shear::Straight, 3, ws));
    REQUIRE(tables.size() == 4);
    for (const auto& t : tables) {
      CHECK(t.lefts.size() == 4);
      CHECK(t.rights.size() == 9);
    }
    CHECK(column_string(tables[0].lefts[0]) == "000");
  }

  TEST_CASE("transposed one-column pairs are not simultaneously unique") {
    std::vector<Window> ws;
    for (const auto& w : enumerate_windows(2, 1, Shear::Straight)) ws.push_back(w.transposed());
    CHECK_THROWS_AS(factor_v(PairSet::make(Axis::Vertical, Shear::Straight, 1, ws)), NotFactorizable);
  }

  TEST_CASE("family structure reports") {
    auto straight3 = verify_family_structure(3, Shear::Straight, false);
    CHECK(straight3.table_count == 108);
    CHECK(straight3.row_count == 216);
    CHECK(straight3.ok());

    auto up3 = verify_family_structure(3, Shear::Up, true);
    CHECK(up3.table_count == 32);
    CHECK(up3.row_count == 64);
    CHECK(up3.ok());

    auto straight2 = verify_family_structure(2, Shear::Straight, true);
    CHECK(straight2.row_count == 24);
    // eight tables of three tops over two bottoms instead of twelve 2x2 ones
    CHECK(straight2.table_count == 8);
    CHECK(straight2.class_histogram.at({3, 2}) == 8);
    CHECK(straight2.has(clause::kTableCount));
  }

  TEST_CASE("down-sheared family counts") {
    auto down2 = verify_family_structure(2, Shear::Down, false);
    CHECK(down2.pair_count == 216);
    CHECK(down2.table_count == 16);
    CHECK(down2.row_count == 36);
    CHECK_FALSE(down2.counts_ok());
    auto down2z = verify_family_structure(2, Shear::Down, true);
    CHECK(down2z.table_count == 8);
    CHECK(down2z.row_count == 24);
  }

  TEST_CASE("table text layout") {
    HTable t{{parse_row("02"), parse_row("22")}, {parse_row("03")}};
    CHECK(table_text(t) == "02\n22\n--\n03\n");
  }
}
