#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sesqui/enumerate.hpp"
#include "sesqui/window.hpp"

namespace sesqui {

// tops x bottoms, every combination a member of the source pair set.
struct HTable {
  std::vector<Word> tops;
  std::vector<Word> bottoms;
  auto operator<=>(const HTable&) const = default;
};

// lefts x rights over columns (index 0 = top cell).
struct VTable {
  std::vector<Word> lefts;
  std::vector<Word> rights;
  auto operator<=>(const VTable&) const = default;
};

enum class Unique { Top, Bottom };

class NotFactorizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fiber factorization: with Unique::Bottom, bottoms sharing the same set of
// tops form one table.
std::vector<HTable> factor_h(const PairSet& pairs, Unique unique);
// Lefts grouped by their right fiber; throws unless the grouping is also
// unique on the right side.
std::vector<VTable> factor_v(const PairSet& pairs);
// Splits the six-row tables: by parity of the rightmost top digit
// class for the sheared families, by equal rightmost digit for the straight one.
std::vector<HTable> split_h14(const std::vector<HTable>& tables, Shear shear);
// The pairs represented by the tables.
std::vector<Window> expand(const std::vector<HTable>& tables, Shear shear);

std::string table_text(const HTable& t);

struct Violation {
  std::string clause;
  std::string detail;
};

struct TableFamilyReport {
  int n = 0;
  Shear family = Shear::Straight;
  bool with_0235 = false;
  std::size_t pair_count = 0;
  std::size_t table_count = 0;
  std::size_t expected_tables = 0;
  std::size_t row_count = 0;
  std::size_t expected_rows = 0;
  std::size_t top_rows = 0;
  std::size_t bottom_rows = 0;
  std::size_t split_table_count = 0;
  // (tops, bottoms) per table -> number of tables.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> class_histogram;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool counts_ok() const;
  bool has(std::string_view clause) const;
};

// Builds the 2 x n family (optionally restricted to 0235 rightmost columns),
// factors it and checks every structural clause that applies to it.
TableFamilyReport verify_family_structure(int n, Shear family, bool with_0235, const EnumerationLimits& limits = {});
TableFamilyReport verify_family_structure(const PairSet& pairs, bool with_0235);

// Clause groups used by the report.
namespace clause {
inline constexpr std::string_view kTableCount = "table-count";
inline constexpr std::string_view kRowCount = "distinct-rows";
inline constexpr std::string_view kTableShape = "rows-per-table";
inline constexpr std::string_view kWideTops = "wide-table-rightmost-digits";
inline constexpr std::string_view kPartner = "partner-with-equal-tops";
inline constexpr std::string_view kTopClasses = "top-column-classes";
inline constexpr std::string_view kTopsEverywhere = "tops-differ-in-every-column";
inline constexpr std::string_view kTopsLeftmost = "tops-differ-only-leftmost";
inline constexpr std::string_view kBottomsLeftmost = "bottoms-differ-only-leftmost";
inline constexpr std::string_view kClassImplication = "column-class-implication";
inline constexpr std::string_view kLeftmostBottoms = "leftmost-bottom-class";
inline constexpr std::string_view kUniqueTops = "unique-top-components";
inline constexpr std::string_view kTailDetermined = "equal-tops-fix-bottom-tail";
}  // namespace clause

}  // namespace sesqui
