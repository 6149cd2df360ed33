#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <span>
#include <vector>

#include "sesqui/automaton.hpp"
#include "sesqui/tables.hpp"
#include "sesqui/window.hpp"

namespace sesqui {

// Columns are read top to bottom unless stated otherwise.
enum class Reading { TopDown, BottomUp };

// The middle digit of the left neighbor of the column x1 x2 x3, when some
// 3 x 2 window has that right column.
std::optional<Digit> L_triple(Digit x1, Digit x2, Digit x3);
// Number of distinct middle-left digits seen for the right column.
int L_witnesses(Digit x1, Digit x2, Digit x3);
// Sliding image, length n - 2; absent when a triple is undefined.
std::optional<Word> L_word(std::span<const Digit> column);
bool is_correct(std::span<const Digit> column);

// All correct words of the given length over the alphabet, sorted. With
// BottomUp the words are returned in reading order (bottom cell first).
std::vector<Word> correct_words(int length, Alphabet alphabet, Reading reading = Reading::TopDown);

// Minimal automaton, all states initial and final, accepting the correct
// words over the alphabet in the given reading order.
PartialAutomaton build_correct_dfa(Alphabet alphabet, Reading reading = Reading::BottomUp);

struct ColumnLemmaReport {
  std::map<std::string, std::size_t> failures;  // clause -> count
  std::vector<Violation> examples;              // first failure per clause
  std::size_t stacks_checked = 0;
  std::size_t words_checked = 0;
  bool ok() const { return failures.empty(); }
  std::size_t count(std::string_view clause) const;
};

namespace column_clause {
inline constexpr std::string_view kRightCorrect = "right-column-correct";
inline constexpr std::string_view kWindowRightCorrect = "window-right-column-correct";
inline constexpr std::string_view kLeftAmongRight = "left-columns-among-right-columns";
inline constexpr std::string_view kNondeadend = "nondeadend-stacks-are-windows";
inline constexpr std::string_view kLeftmostCovers = "correct-words-are-leftmost-columns";
}  // namespace column_clause

// Exhaustive checks with straight 2 x 2 pairs B stacked up to `depth` rows:
// right columns of stacks of two or more pairs are correct, and also those of
// the stacks that are windows; left columns occur as right columns; the
// horizontally non-dead-end part of the (n-1)-fold stack equals the n x 2
// windows; every correct {0,2,3,5} word up to `depth` is the leftmost column
// of a stack of straight (n+1)-wide pairs.
ColumnLemmaReport verify_column_lemmas(int n, int depth, const EnumerationLimits& limits = {});

// Whether the column occurs as the leftmost column of a stack of straight
// (n+1)-wide pairs. Throws for columns outside {0,2,3,5}.
bool is_leftmost_column(std::span<const Digit> column, int n, const EnumerationLimits& limits = {});

struct UniquenessReport {
  std::size_t right_column_conflicts = 0;   // 3 x 2: right column -> middle-left
  std::size_t bottom_row_conflicts = 0;     // 2 x 3: bottom row -> middle-top
  std::size_t top_row_conflicts = 0;        // 2 x 3: top row -> middle-bottom
  bool ok() const { return right_column_conflicts + bottom_row_conflicts + top_row_conflicts == 0; }
};
UniquenessReport verify_local_uniqueness();

// Correct words of each length in [min_len, max_len] whose L image is not correct.
std::size_t closure_failures(int min_len, int max_len);

}  // namespace sesqui
