#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "sesqui/window.hpp"

namespace sesqui {

// Carries of one column of the relation 2 * lower = 3 * upper: r belongs to
// the x3 track (0..2), s to the x2 track (0..1).
struct CarryState {
  std::uint8_t r = 0;
  std::uint8_t s = 0;

  constexpr int code() const { return r * 2 + s; }
  static constexpr CarryState from_code(int c) {
    return CarryState{static_cast<std::uint8_t>(c / 2), static_cast<std::uint8_t>(c % 2)};
  }
  auto operator<=>(const CarryState&) const = default;
};

inline constexpr int kCarryStates = 6;

// One column step, processed right to left: `a` is the upper digit, `b` the
// lower one.
std::optional<CarryState> carry_step(CarryState state, Digit a, Digit b);

std::vector<CarryState> recurrent_carry_states();

// A finite base-6 number: digit k sits at position offset + k.
struct Row {
  Word digits;
  int offset = 0;

  bool operator==(const Row&) const = default;
};

Row normalize(Row row);
Row parse_number(std::string_view text);  // "4.3", "13", ...
std::string number_string(const Row& row);

// Exact 3/2 multiple of the row read with zeros outside its support.
Row mul_row_3_2(const Row& row);

}  // namespace sesqui
