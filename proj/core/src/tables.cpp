#include "sesqui/tables.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sesqui {

namespace {

Word top_of(const PairSet& p, const Window& w) { return p.axis == Axis::Horizontal ? w.row(0) : w.column(1); }
Word bottom_of(const PairSet& p, const Window& w) { return p.axis == Axis::Horizontal ? w.row(1) : w.column(0); }

template <class Table>
std::vector<Table> fibers(const PairSet& pairs, bool group_bottoms) {
  // key row -> rows on the other side
  std::map<Word, std::vector<Word>> fiber;
  for (const auto& w : pairs.members) {
    Word t = top_of(pairs, w), b = bottom_of(pairs, w);
    if (group_bottoms)
      fiber[b].push_back(t);
    else
      fiber[t].push_back(b);
  }
  std::map<std::vector<Word>, std::vector<Word>> groups;
  for (auto& [key, other] : fiber) {
    sort_unique(other);
    groups[other].push_back(key);
  }
  std::vector<Table> out;
  for (auto& [other, keys] : groups) {
    sort_unique(keys);
    if (group_bottoms)
      out.push_back(Table{other, keys});
    else
      out.push_back(Table{keys, other});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::set<Digit> column_digits(const std::vector<Word>& rows, std::size_t j) {
  std::set<Digit> s;
  for (const auto& r : rows) s.insert(r[j]);
  return s;
}

bool subset_of(const std::set<Digit>& s, std::initializer_list<Digit> allowed) {
  return std::all_of(s.begin(), s.end(),
                     [&](Digit d) { return std::find(allowed.begin(), allowed.end(), d) != allowed.end(); });
}

bool differ_only_leftmost(const std::vector<Word>& rows) {
  if (rows.empty()) return true;
  std::size_t n = rows[0].size();
  for (const auto& r : rows)
    if (!std::equal(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n - 1), rows[0].begin())) return false;
  return true;
}

bool differ_everywhere(const std::vector<Word>& rows) {
  for (std::size_t j = 0; j < (rows.empty() ? 0 : rows[0].size()); ++j)
    if (column_digits(rows, j).size() != rows.size()) return false;
  return true;
}

const std::set<Digit> kEven{0, 2, 4};
const std::set<Digit> kOdd{1, 3, 5};

class Checker {
 public:
  explicit Checker(std::vector<Violation>& v) : out_(v) {}
  void require(bool ok, std::string_view clause, const std::string& detail) {
    if (!ok) out_.push_back(Violation{std::string(clause), detail});
  }

 private:
  std::vector<Violation>& out_;
};

// Column class rule for tables with three top rows.
void check_three_row_classes(const HTable& t, bool tops_cover_class, Checker& c) {
  std::size_t n = t.tops[0].size();
  for (std::size_t j = 0; j < n; ++j) {
    auto top = column_digits(t.tops, j);
    auto bot = column_digits(t.bottoms, j);
    bool even = std::includes(kEven.begin(), kEven.end(), top.begin(), top.end());
    bool odd = std::includes(kOdd.begin(), kOdd.end(), top.begin(), top.end());
    if (tops_cover_class) c.require(top == kEven || top == kOdd, clause::kTopClasses, table_text(t));
    if (even)
      c.require(subset_of(bot, {0, 3}) || subset_of(bot, {1, 4}), clause::kClassImplication, table_text(t));
    else if (odd)
      c.require(subset_of(bot, {2, 5}) || subset_of(bot, {1, 4}), clause::kClassImplication, table_text(t));
  }
}

// Column class rule for tables restricted to 0235 rightmost columns.
void check_two_row_classes(const HTable& t, Checker& c) {
  std::size_t n = t.tops[0].size();
  for (std::size_t j = 0; j < n; ++j) {
    auto top = column_digits(t.tops, j);
    auto bot = column_digits(t.bottoms, j);
    if (std::includes(kOdd.begin(), kOdd.end(), top.begin(), top.end()))
      c.require(subset_of(bot, {1, 2, 4, 5}), clause::kClassImplication, table_text(t));
    else if (std::includes(kEven.begin(), kEven.end(), top.begin(), top.end()))
      c.require(subset_of(bot, {0, 1, 3, 4}), clause::kClassImplication, table_text(t));
  }
}

void check_partners(const std::vector<HTable>& tables, Checker& c) {
  std::map<std::vector<Word>, int> by_tops;
  for (const auto& t : tables) ++by_tops[t.tops];
  for (const auto& t : tables) c.require(by_tops[t.tops] >= 2, clause::kPartner, table_text(t));
}

}  // namespace

std::vector<HTable> factor_h(const PairSet& pairs, Unique unique) {
  if (pairs.axis != Axis::Horizontal) throw std::invalid_argument("factor_h needs horizontal pairs");
  return fibers<HTable>(pairs, unique == Unique::Bottom);
}

std::vector<VTable> factor_v(const PairSet& pairs) {
  if (pairs.axis != Axis::Vertical) throw std::invalid_argument("factor_v needs vertical pairs");
  auto by_right = fibers<VTable>(pairs, true);
  auto by_left = fibers<VTable>(pairs, false);
  if (by_right != by_left) throw NotFactorizable("left and right fibers do not agree");
  return by_right;
}

std::vector<HTable> split_h14(const std::vector<HTable>& tables, Shear shear) {
  std::vector<HTable> out;
  for (const auto& t : tables) {
    if (t.tops.size() != 6) {
      out.push_back(t);
      continue;
    }
    std::map<int, std::vector<Word>> groups;
    for (const auto& r : t.tops) groups[shear == Shear::Straight ? r[0] : r[0] % 2].push_back(r);
    if (groups.size() < 2) throw std::invalid_argument("table cannot be split: " + table_text(t));
    for (auto& [k, tops] : groups) out.push_back(HTable{tops, t.bottoms});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Window> expand(const std::vector<HTable>& tables, Shear shear) {
  std::vector<Window> out;
  for (const auto& t : tables)
    for (const auto& a : t.tops)
      for (const auto& b : t.bottoms) out.push_back(Window({a, b}, shear));
  sort_unique(out);
  return out;
}

std::string table_text(const HTable& t) {
  std::ostringstream s;
  for (const auto& r : t.tops) s << row_string(r) << '\n';
  s << std::string(t.tops.empty() ? 1 : t.tops[0].size(), '-') << '\n';
  for (const auto& r : t.bottoms) s << row_string(r) << '\n';
  return s.str();
}

bool TableFamilyReport::counts_ok() const { return table_count == expected_tables && row_count == expected_rows; }

bool TableFamilyReport::has(std::string_view c) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.clause == c; });
}

TableFamilyReport verify_family_structure(int n, Shear family, bool with_0235, const EnumerationLimits& limits) {
  PairSet pairs = with_0235 ? pair_family_0235(n, family, limits) : pair_family(n, family, limits);
  return verify_family_structure(pairs, with_0235);
}

TableFamilyReport verify_family_structure(const PairSet& pairs, bool with_0235) {
  TableFamilyReport r;
  r.n = pairs.width;
  r.family = pairs.shear;
  r.with_0235 = with_0235;
  r.pair_count = pairs.size();
  Checker c(r.violations);
  const int n = pairs.width;
  const bool sheared = pairs.shear != Shear::Straight;
  const std::size_t base = sheared ? 4 : 6;

  auto tables = factor_h(pairs, Unique::Bottom);
  r.table_count = tables.size();
  r.row_count = pairs.distinct_rows().size();
  r.top_rows = pairs.top_rows().size();
  r.bottom_rows = pairs.bottom_rows().size();
  for (const auto& t : tables) ++r.class_histogram[{t.tops.size(), t.bottoms.size()}];

  // Union of products must give back the pairs, bottoms partitioned.
  c.require(expand(tables, pairs.shear) == pairs.members, "factorization-sound", "union of tables differs from pairs");

  if (!with_0235) {
    r.expected_tables = 3 * ipow(base, n - 1);
    r.expected_rows = sheared ? 6 * ipow(4, n - 1) : ipow(6, n);
    c.require(r.table_count == r.expected_tables, clause::kTableCount,
              std::to_string(r.table_count) + " tables, expected " + std::to_string(r.expected_tables));
    c.require(r.row_count == r.expected_rows, clause::kRowCount,
              std::to_string(r.row_count) + " rows, expected " + std::to_string(r.expected_rows));
    std::size_t wide = 0;
    for (const auto& t : tables) {
      c.require(t.bottoms.size() == 2 && (t.tops.size() == 3 || t.tops.size() == 6), clause::kTableShape, table_text(t));
      if (t.tops.size() == 6) {
        ++wide;
        if (sheared) c.require(column_digits(t.tops, 0).size() == 6, clause::kWideTops, table_text(t));
      }
    }
    c.require(wide == ipow(base, n - 1), clause::kTableShape,
              std::to_string(wide) + " six-row tables, expected " + std::to_string(ipow(base, n - 1)));

    std::vector<HTable> split;
    try {
      split = split_h14(tables, pairs.shear);
    } catch (const std::invalid_argument& e) {
      c.require(false, clause::kTableShape, e.what());
      return r;
    }
    r.split_table_count = split.size();
    check_partners(split, c);
    for (const auto& t : split) {
      c.require(t.tops.size() == 3, clause::kTableShape, table_text(t));
      c.require(differ_only_leftmost(t.bottoms), clause::kBottomsLeftmost, table_text(t));
      if (sheared)
        c.require(differ_everywhere(t.tops), clause::kTopsEverywhere, table_text(t));
      else
        c.require(differ_only_leftmost(t.tops), clause::kTopsLeftmost, table_text(t));
      check_three_row_classes(t, sheared, c);
    }
    return r;
  }

  r.expected_tables = 2 * ipow(base, n - 1);
  r.expected_rows = sheared ? ipow(4, n) : 4 * ipow(6, n - 1);
  c.require(r.table_count == r.expected_tables, clause::kTableCount,
            std::to_string(r.table_count) + " tables, expected " + std::to_string(r.expected_tables));
  c.require(r.row_count == r.expected_rows, clause::kRowCount,
            std::to_string(r.row_count) + " rows, expected " + std::to_string(r.expected_rows));

  auto by_top = factor_h(pairs, Unique::Top);
  c.require(by_top == tables, clause::kUniqueTops, "top and bottom fibers disagree");

  for (const auto& t : tables) {
    c.require(t.tops.size() == 2 && t.bottoms.size() == 2, clause::kTableShape, table_text(t));
    c.require(differ_only_leftmost(t.bottoms), clause::kBottomsLeftmost, table_text(t));
    if (sheared) {
      c.require(differ_everywhere(t.tops), clause::kTopsEverywhere, table_text(t));
      for (std::size_t j = 0; j < t.tops[0].size(); ++j) {
        auto top = column_digits(t.tops, j);
        bool one_class = std::includes(kEven.begin(), kEven.end(), top.begin(), top.end()) ||
                         std::includes(kOdd.begin(), kOdd.end(), top.begin(), top.end());
        c.require(one_class, clause::kTopClasses, table_text(t));
      }
      auto lead = column_digits(t.bottoms, static_cast<std::size_t>(n - 1));
      c.require(subset_of(lead, {0, 3}) || subset_of(lead, {2, 5}) || subset_of(lead, {1, 4}), clause::kLeftmostBottoms,
                table_text(t));
    } else {
      c.require(differ_only_leftmost(t.tops), clause::kTopsLeftmost, table_text(t));
    }
    check_two_row_classes(t, c);
  }

  std::map<Word, std::vector<Word>> below;
  for (const auto& w : pairs.members) below[w.row(0)].push_back(w.row(1));
  for (const auto& [top, bots] : below)
    c.require(differ_only_leftmost(bots), clause::kTailDetermined, row_string(top));
  return r;
}

}  // namespace sesqui
