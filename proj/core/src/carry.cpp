#include "sesqui/carry.hpp"

#include <algorithm>
#include <stdexcept>

namespace sesqui {

std::optional<CarryState> carry_step(CarryState state, Digit a, Digit b) {
  int t = 3 * a + state.r;
  int u = 2 * b + state.s;
  if (t % 6 != u % 6) return std::nullopt;
  return CarryState{static_cast<std::uint8_t>(t / 6), static_cast<std::uint8_t>(u / 6)};
}

std::vector<CarryState> recurrent_carry_states() {
  std::array<std::array<bool, kCarryStates>, kCarryStates> reach{};
  for (int c = 0; c < kCarryStates; ++c)
    for (Digit a = 0; a < 6; ++a)
      for (Digit b = 0; b < 6; ++b)
        if (auto n = carry_step(CarryState::from_code(c), a, b)) reach[c][n->code()] = true;
  for (int k = 0; k < kCarryStates; ++k)
    for (int i = 0; i < kCarryStates; ++i)
      for (int j = 0; j < kCarryStates; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  std::vector<CarryState> out;
  for (int c = 0; c < kCarryStates; ++c)
    if (reach[c][c]) out.push_back(CarryState::from_code(c));
  return out;
}

Row normalize(Row row) {
  auto& d = row.digits;
  std::size_t lo = 0;
  while (lo < d.size() && d[lo] == 0 && row.offset + static_cast<int>(lo) < 0) ++lo;
  std::size_t hi = d.size();
  while (hi > lo && d[hi - 1] == 0 && row.offset + static_cast<int>(hi) - 1 > 0) --hi;
  if (lo == hi) return Row{{0}, 0};
  Row out{Word(d.begin() + static_cast<std::ptrdiff_t>(lo), d.begin() + static_cast<std::ptrdiff_t>(hi)),
          row.offset + static_cast<int>(lo)};
  // Pad so that position 0 is always present.
  if (out.offset > 0) {
    out.digits.insert(out.digits.begin(), static_cast<std::size_t>(out.offset), 0);
    out.offset = 0;
  }
  int top = out.offset + static_cast<int>(out.digits.size()) - 1;
  if (top < 0) out.digits.resize(out.digits.size() + static_cast<std::size_t>(-top), 0);
  return out;
}

Row parse_number(std::string_view text) {
  auto dot = text.find('.');
  std::string_view ip = text.substr(0, dot);
  std::string_view fp = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  Row r;
  r.offset = -static_cast<int>(fp.size());
  Word f = parse_row(fp), i = parse_row(ip);
  r.digits = f;
  r.digits.insert(r.digits.end(), i.begin(), i.end());
  if (r.digits.empty()) throw std::invalid_argument("empty number");
  return normalize(std::move(r));
}

std::string number_string(const Row& row) {
  Row n = normalize(row);
  std::string s;
  for (std::size_t k = n.digits.size(); k-- > 0;) {
    s.push_back(static_cast<char>('0' + n.digits[k]));
    if (n.offset + static_cast<int>(k) == 0 && k > 0) s.push_back('.');
  }
  return s;
}

Row mul_row_3_2(const Row& row) {
  // 3/2 = 9/6: multiply by nine, then shift one place right.
  Row out;
  out.offset = row.offset - 1;
  int carry = 0;
  for (Digit d : row.digits) {
    int v = 9 * d + carry;
    out.digits.push_back(static_cast<Digit>(v % 6));
    carry = v / 6;
  }
  while (carry) {
    out.digits.push_back(static_cast<Digit>(carry % 6));
    carry /= 6;
  }
  return normalize(std::move(out));
}

}  // namespace sesqui
