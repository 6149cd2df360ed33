#include "sesqui/window.hpp"

#include <algorithm>
#include <stdexcept>

namespace sesqui {

Alphabet parse_alphabet(std::string_view digits) {
  Alphabet a = 0;
  for (char c : digits) {
    if (c == ',' || c == ' ' || c == '{' || c == '}') continue;
    if (c < '0' || c > '5') throw std::invalid_argument("alphabet digit out of range: " + std::string(1, c));
    a |= static_cast<Alphabet>(1u << (c - '0'));
  }
  if (a == 0) throw std::invalid_argument("empty alphabet");
  return a;
}

std::string alphabet_string(Alphabet a) {
  std::string s;
  for (int d = 0; d < 6; ++d)
    if (allows(a, static_cast<Digit>(d))) s.push_back(static_cast<char>('0' + d));
  return s;
}

std::string_view to_string(Shear s) {
  switch (s) {
    case Shear::Straight: return "straight";
    case Shear::Up: return "up";
    case Shear::Down: return "down";
  }
  return "?";
}

std::optional<Shear> parse_shear(std::string_view s) {
  if (s == "straight") return Shear::Straight;
  if (s == "up") return Shear::Up;
  if (s == "down") return Shear::Down;
  return std::nullopt;
}

std::string row_string(std::span<const Digit> row) {
  std::string s(row.size(), '0');
  for (std::size_t k = 0; k < row.size(); ++k) s[row.size() - 1 - k] = static_cast<char>('0' + row[k]);
  return s;
}

std::string column_string(std::span<const Digit> column) {
  std::string s(column.size(), '0');
  for (std::size_t k = 0; k < column.size(); ++k) s[k] = static_cast<char>('0' + column[k]);
  return s;
}

namespace {
Digit digit_of(char c) {
  if (c < '0' || c > '5') throw std::invalid_argument(std::string("not a base-6 digit: ") + c);
  return static_cast<Digit>(c - '0');
}
}  // namespace

Word parse_row(std::string_view text) {
  Word w(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) w[text.size() - 1 - k] = digit_of(text[k]);
  return w;
}

Word parse_column(std::string_view text) {
  Word w(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) w[k] = digit_of(text[k]);
  return w;
}

Word dual(std::span<const Digit> w) {
  Word out(w.begin(), w.end());
  for (auto& d : out) d = static_cast<Digit>(5 - d);
  return out;
}

bool all_in(std::span<const Digit> w, Alphabet a) {
  return std::all_of(w.begin(), w.end(), [a](Digit d) { return allows(a, d); });
}

Window::Window(int rows, int cols, Shear shear)
    : rows_(rows), cols_(cols), shear_(shear), cells_(static_cast<std::size_t>(rows * cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative window shape");
}

Window::Window(const std::vector<Word>& rows, Shear shear)
    : Window(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()), shear) {
  for (int i = 0; i < rows_; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != cols_)
      throw std::invalid_argument("ragged window rows");
    for (int j = 0; j < cols_; ++j) set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
}

Word Window::row(int i) const {
  auto first = cells_.begin() + i * cols_;
  return Word(first, first + cols_);
}

Word Window::column(int j) const {
  Word c(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = at(i, j);
  return c;
}

Window Window::with_shear(Shear s) const {
  Window w = *this;
  w.shear_ = s;
  return w;
}

Window Window::transposed() const {
  // Row i of the result is column (cols-1-i) read top to bottom, so that the
  // leftmost column becomes the top row and the top cell becomes rightmost.
  Window t(cols_, rows_, shear_);
  for (int i = 0; i < cols_; ++i)
    for (int j = 0; j < rows_; ++j) t.set(i, j, at(rows_ - 1 - j, cols_ - 1 - i));
  return t;
}

Window Window::sub(int i0, int j0, int rows, int cols) const {
  if (i0 < 0 || j0 < 0 || i0 + rows > rows_ || j0 + cols > cols_) throw std::out_of_range("sub-window outside window");
  Window s(rows, cols, shear_);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) s.set(i, j, at(i0 + i, j0 + j));
  return s;
}

bool Window::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](Digit d) { return d == 0; });
}

std::vector<std::string> Window::lines() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out.push_back(row_string(row(i)));
  return out;
}

std::string Window::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    if (i) s.push_back('/');
    s += row_string(row(i));
  }
  return s;
}

Window dual(const Window& w) {
  Window d = w;
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) d.set(i, j, static_cast<Digit>(5 - w.at(i, j)));
  return d;
}

void sort_unique(std::vector<Window>& ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

void sort_unique(std::vector<Word>& ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

PairSet PairSet::make(Axis axis, Shear shear, int width, std::vector<Window> members) {
  for (const auto& w : members) {
    bool ok = axis == Axis::Horizontal ? (w.rows() == 2 && w.cols() == width) : (w.cols() == 2 && w.rows() == width);
    if (!ok) throw std::invalid_argument("pair shape does not match the pair set");
  }
  sort_unique(members);
  return PairSet{axis, width, shear, std::move(members)};
}

bool PairSet::contains(const Window& w) const { return std::binary_search(members.begin(), members.end(), w); }

std::vector<Word> PairSet::top_rows() const {
  std::vector<Word> out;
  for (const auto& w : members) out.push_back(axis == Axis::Horizontal ? w.row(0) : w.column(1));
  sort_unique(out);
  return out;
}

std::vector<Word> PairSet::bottom_rows() const {
  std::vector<Word> out;
  for (const auto& w : members) out.push_back(axis == Axis::Horizontal ? w.row(1) : w.column(0));
  sort_unique(out);
  return out;
}

std::vector<Word> PairSet::distinct_rows() const {
  auto out = top_rows();
  auto b = bottom_rows();
  out.insert(out.end(), b.begin(), b.end());
  sort_unique(out);
  return out;
}

PairSet dual(const PairSet& p) {
  std::vector<Window> ms;
  ms.reserve(p.members.size());
  for (const auto& w : p.members) ms.push_back(dual(w));
  return PairSet::make(p.axis, p.shear, p.width, std::move(ms));
}

PairSet restrict_rightmost(const PairSet& p, Alphabet a) {
  std::vector<Window> ms;
  for (const auto& w : p.members)
    if (all_in(w.rightmost_column(), a)) ms.push_back(w);
  return PairSet{p.axis, p.width, p.shear, std::move(ms)};
}

}  // namespace sesqui
