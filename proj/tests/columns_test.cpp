#include <doctest.h>

#include "sesqui/columns.hpp"

using namespace sesqui;

TEST_SUITE("columns") {
  TEST_CASE("stacks") {
    CHECK(stacks_0235(2, 1).size() == 16);
    CHECK(stacks_0235(2, 2).size() == 32);
    CHECK(stacks_0235(2, 3).size() == 64);
  }

  TEST_CASE("leftmost columns of short stacks are ambiguous") {
    // (n, rows) -> ambiguous leftmost columns
    CHECK(leftmost_column_determinism(1, 4).ok());
    CHECK(leftmost_column_determinism(2, 1).ambiguous_columns == 6);
    CHECK(leftmost_column_determinism(2, 2).ambiguous_columns == 12);
    CHECK(leftmost_column_determinism(2, 3).ambiguous_columns == 8);
    CHECK(leftmost_column_determinism(2, 4).ambiguous_columns == 4);
    CHECK(leftmost_column_determinism(3, 4).ambiguous_columns == 160);
    auto r = leftmost_column_determinism(2, 2);
    REQUIRE(r.witness.size() == 2);
    CHECK(r.witness[0].leftmost_column() == r.witness[1].leftmost_column());
    CHECK(r.witness[0] != r.witness[1]);
  }

  TEST_CASE("columns leading into the kernel determine the stack") {
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= 4; ++m) CHECK(kernel_column_determinism(n, m).ok());
  }

  TEST_CASE("zero columns") {
    CHECK(zero_word_depth(1) == 1);
    CHECK(zero_word_depth(2) == 3);
    auto at_previous = zero_column_propagation(2, zero_word_depth(1) + 1);
    CHECK(at_previous.zero_column_stacks == 2);
    CHECK(at_previous.nonzero_stacks == 1);
    auto r = zero_column_propagation(3, 1);
    CHECK(r.minimal_rows == 6);
    CHECK(zero_column_propagation(3, 6).ok());
  }

  TEST_CASE("triangle bijection") {
    for (int k = 1; k <= 3; ++k) {
      auto r = triangle_bijection(k);
      CHECK(r.ok());
      CHECK(r.image == std::size_t{1} << (2 * (k + 1)));
    }
  }

  TEST_CASE("square bijection") {
    for (int k = 1; k <= 3; ++k) CHECK(square_bijection(k).ok());
    auto short_stacks = square_bijection(2, 3);
    CHECK(short_stacks.functional);
    CHECK_FALSE(short_stacks.injective);
    CHECK(short_stacks.image == 16);
  }

  TEST_CASE("shape errors") {
    CHECK_THROWS_AS(stacks_0235(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(triangle_bijection(0), std::invalid_argument);
  }
}
