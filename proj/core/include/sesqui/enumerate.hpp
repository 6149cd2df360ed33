#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sesqui/carry.hpp"
#include "sesqui/window.hpp"

namespace sesqui {

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  // Product states of the enclosing rectangle: 6^(rows-1).
  std::size_t max_product_states = 46656;
  int threads = 0;  // 0: default_threads()
};

// Cell (i, j) of an n x m window of the given family sits at row/column
// (r, c) of the underlying 2-D word, rows growing downward by the 3/2 step.
struct GridPoint {
  int r;
  int c;
};
GridPoint shear_map(Shear shear, int i, int j);

// Every n x m window occurring in a bi-infinite word of the family.
std::vector<Window> enumerate_windows(int n, int m, Shear shear, const EnumerationLimits& limits = {});

// Horizontal 2 x n pairs of the family.
PairSet pair_family(int n, Shear shear, const EnumerationLimits& limits = {});
// Pairs whose rightmost column avoids 1 and 4.
PairSet pair_family_0235(int n, Shear shear, const EnumerationLimits& limits = {});

// Trapezoid scheme: `top` has width m + 2(n-1); each next row is 3/2 of the
// previous one with one digit trimmed per side. Returns the central n x m core.
Window trapezoid_oracle(std::span<const Digit> top, int n);
// Union of trapezoid cores over all tops.
std::vector<Window> oracle_windows(int n, int m, int threads = 0);

}  // namespace sesqui
