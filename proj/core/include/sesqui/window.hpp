#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sesqui {

using Digit = std::uint8_t;

// A finite word over Z_6. For rows, index 0 is the rightmost (least
// significant) digit. For columns, index 0 is the top cell.
using Word = std::vector<Digit>;

// Bit k set means digit k is allowed.
using Alphabet = std::uint8_t;
inline constexpr Alphabet kAllDigits = 0b111111;
inline constexpr Alphabet k0235 = 0b101101;
inline constexpr Alphabet k012 = 0b000111;

constexpr bool allows(Alphabet a, Digit d) { return (a >> d) & 1u; }
Alphabet parse_alphabet(std::string_view digits);
std::string alphabet_string(Alphabet a);

enum class Shear : std::uint8_t { Straight, Up, Down };
std::string_view to_string(Shear s);
std::optional<Shear> parse_shear(std::string_view s);

enum class Axis : std::uint8_t { Horizontal, Vertical };

// Rows print most significant digit first; columns print top first.
std::string row_string(std::span<const Digit> row);
std::string column_string(std::span<const Digit> column);
Word parse_row(std::string_view text);
Word parse_column(std::string_view text);

Word dual(std::span<const Digit> w);
bool all_in(std::span<const Digit> w, Alphabet a);

// An n x m block of digits. Cell (i, j): i counts rows from the top, j counts
// columns from the right.
class Window {
 public:
  Window() = default;
  Window(int rows, int cols, Shear shear = Shear::Straight);
  // Rows given top to bottom, each in row order (index 0 rightmost).
  Window(const std::vector<Word>& rows, Shear shear = Shear::Straight);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Shear shear() const { return shear_; }
  Digit at(int i, int j) const { return cells_[static_cast<std::size_t>(i * cols_ + j)]; }
  void set(int i, int j, Digit d) { cells_[static_cast<std::size_t>(i * cols_ + j)] = d; }

  Word row(int i) const;
  Word column(int j) const;
  Word leftmost_column() const { return column(cols_ - 1); }
  Word rightmost_column() const { return column(0); }
  std::span<const Digit> cells() const { return cells_; }

  Window with_shear(Shear s) const;
  Window transposed() const;
  Window sub(int i0, int j0, int rows, int cols) const;
  bool is_zero() const;

  std::vector<std::string> lines() const;
  std::string to_string() const;

  auto operator<=>(const Window&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Shear shear_ = Shear::Straight;
  std::vector<Digit> cells_;
};

Window dual(const Window& w);

// A set of 2 x n (horizontal) or n x 2 (vertical) windows, kept sorted.
struct PairSet {
  Axis axis = Axis::Horizontal;
  int width = 0;
  Shear shear = Shear::Straight;
  std::vector<Window> members;

  static PairSet make(Axis axis, Shear shear, int width, std::vector<Window> members);
  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(const Window& w) const;
  std::vector<Word> top_rows() const;
  std::vector<Word> bottom_rows() const;
  std::vector<Word> distinct_rows() const;

  bool operator==(const PairSet&) const = default;
};

PairSet dual(const PairSet& p);
// Keeps pairs whose rightmost column is over the alphabet.
PairSet restrict_rightmost(const PairSet& p, Alphabet a);

void sort_unique(std::vector<Window>& ws);
void sort_unique(std::vector<Word>& ws);

}  // namespace sesqui
