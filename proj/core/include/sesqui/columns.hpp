#pragma once

#include <cstddef>
#include <vector>

#include "sesqui/automaton.hpp"
#include "sesqui/enumerate.hpp"
#include "sesqui/window.hpp"

namespace sesqui {

// Vertical stacks of 0235 pairs of width n with the given number of rows:
// paths in G_n. One row gives the rows of G_n themselves.
std::vector<Window> stacks_0235(int n, int rows, const EnumerationLimits& limits = {});

struct DeterminismReport {
  int n = 0;
  int rows = 0;
  std::size_t stacks = 0;
  std::size_t columns = 0;            // distinct leftmost columns considered
  std::size_t ambiguous_columns = 0;  // shared by two or more stacks
  std::vector<Window> witness;        // two stacks with a shared column
  bool ok() const { return ambiguous_columns == 0; }
};

// Equal leftmost columns imply equal stacks, over all stacks.
DeterminismReport leftmost_column_determinism(int n, int rows, const EnumerationLimits& limits = {});
// Same, restricted to stacks whose leftmost column, read downward, takes the
// minimal automaton of A_n from its initial state into the kernel.
DeterminismReport kernel_column_determinism(int n, int rows, const EnumerationLimits& limits = {});

// theta of the minimal automaton of A_n, n >= 1.
int zero_word_depth(int n, const EnumerationLimits& limits = {});

struct ZeroColumnReport {
  int n = 0;
  int rows = 0;
  std::size_t zero_column_stacks = 0;
  std::size_t nonzero_stacks = 0;  // zero leftmost column, some nonzero cell
  int minimal_rows = -1;           // least height at which the zero column forces zeros
  bool ok() const { return nonzero_stacks == 0; }
};

// Stacks of width n with an all-zero leftmost column and the given height
// are all-zero. minimal_rows is searched up to max_rows.
ZeroColumnReport zero_column_propagation(int n, int rows, int max_rows = 16, const EnumerationLimits& limits = {});

struct BijectionReport {
  int size = 0;
  std::size_t domain = 0;      // vertical words or top rows
  std::size_t image = 0;       // distinct diagonals or right columns
  std::size_t expected = 0;    // size of the target set
  bool functional = true;      // each domain element has one image
  bool injective = true;
  bool onto = true;            // image equals the target set
  bool ok() const { return functional && injective && onto && domain == expected; }
};

// Triangles of height 2k+1: the vertical side is a correct {0,2,3,5} word,
// each further column is L of the previous one, the diagonal collects the
// top cells. Diagonal words must be exactly the rows of G_{k+1}.
BijectionReport triangle_bijection(int k, const EnumerationLimits& limits = {});

// Square words of width k+1: stacks with `rows` rows; top rows against
// right columns, the target being all correct {0,2,3,5} words of that
// length. rows = 0 means 2k+1.
BijectionReport square_bijection(int k, int rows = 0, const EnumerationLimits& limits = {});

}  // namespace sesqui
