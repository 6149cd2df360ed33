#pragma once

#include <optional>
#include <vector>

#include "sesqui/window.hpp"

namespace sesqui {

// u ∘ v: u's rightmost column must equal v's leftmost column; u ends up on
// the left. (12/45) ∘ (23/56) = (123/456).
std::optional<Window> hjoin(const Window& u, const Window& v);
// u • v: v's bottom row must equal u's top row; v ends up on top.
// (34/56) • (12/34) = (12/34/56).
std::optional<Window> vjoin(const Window& u, const Window& v);

std::vector<Window> hjoin(const std::vector<Window>& a, const std::vector<Window>& b);
std::vector<Window> vjoin(const std::vector<Window>& a, const std::vector<Window>& b);
// A^{k∘} = A^{(k-1)∘} ∘ A with A^{1∘} = A; likewise for •.
std::vector<Window> hpower(const std::vector<Window>& a, int k);
std::vector<Window> vpower(const std::vector<Window>& a, int k);

// Members lying on a bi-infinite chain of overlapping members: horizontal
// chains overlap in one column, vertical chains in one row.
std::vector<Window> nondeadend(const std::vector<Window>& w, Axis direction);
PairSet nondeadend(const PairSet& w, Axis direction);

}  // namespace sesqui
