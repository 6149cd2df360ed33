#include "sesqui/join.hpp"

#include <map>
#include <stdexcept>

namespace sesqui {

std::optional<Window> hjoin(const Window& u, const Window& v) {
  if (u.rows() != v.rows()) throw std::invalid_argument("hjoin needs equal heights");
  if (u.shear() != v.shear()) throw std::invalid_argument("hjoin needs equal shear tags");
  if (u.rightmost_column() != v.leftmost_column()) return std::nullopt;
  Window w(u.rows(), u.cols() + v.cols() - 1, u.shear());
  for (int i = 0; i < u.rows(); ++i) {
    for (int j = 0; j < v.cols(); ++j) w.set(i, j, v.at(i, j));
    for (int j = 1; j < u.cols(); ++j) w.set(i, v.cols() - 1 + j, u.at(i, j));
  }
  return w;
}

std::optional<Window> vjoin(const Window& u, const Window& v) {
  if (u.cols() != v.cols()) throw std::invalid_argument("vjoin needs equal widths");
  if (u.shear() != v.shear()) throw std::invalid_argument("vjoin needs equal shear tags");
  if (v.row(v.rows() - 1) != u.row(0)) return std::nullopt;
  Window w(u.rows() + v.rows() - 1, u.cols(), u.shear());
  for (int j = 0; j < u.cols(); ++j) {
    for (int i = 0; i < v.rows(); ++i) w.set(i, j, v.at(i, j));
    for (int i = 1; i < u.rows(); ++i) w.set(v.rows() - 1 + i, j, u.at(i, j));
  }
  return w;
}

std::vector<Window> hjoin(const std::vector<Window>& a, const std::vector<Window>& b) {
  std::multimap<Word, const Window*> by_left;
  for (const auto& v : b) by_left.emplace(v.leftmost_column(), &v);
  std::vector<Window> out;
  for (const auto& u : a) {
    auto [lo, hi] = by_left.equal_range(u.rightmost_column());
    for (auto it = lo; it != hi; ++it) out.push_back(*hjoin(u, *it->second));
  }
  sort_unique(out);
  return out;
}

std::vector<Window> vjoin(const std::vector<Window>& a, const std::vector<Window>& b) {
  std::multimap<Word, const Window*> by_bottom;
  for (const auto& v : b) by_bottom.emplace(v.row(v.rows() - 1), &v);
  std::vector<Window> out;
  for (const auto& u : a) {
    auto [lo, hi] = by_bottom.equal_range(u.row(0));
    for (auto it = lo; it != hi; ++it) out.push_back(*vjoin(u, *it->second));
  }
  sort_unique(out);
  return out;
}

std::vector<Window> hpower(const std::vector<Window>& a, int k) {
  if (k < 1) throw std::invalid_argument("power must be positive");
  std::vector<Window> out = a;
  sort_unique(out);
  for (int i = 1; i < k; ++i) out = hjoin(out, a);
  return out;
}

std::vector<Window> vpower(const std::vector<Window>& a, int k) {
  if (k < 1) throw std::invalid_argument("power must be positive");
  std::vector<Window> out = a;
  sort_unique(out);
  for (int i = 1; i < k; ++i) out = vjoin(out, a);
  return out;
}

std::vector<Window> nondeadend(const std::vector<Window>& w, Axis direction) {
  // Each member is an edge between its two boundary slices; keep edges whose
  // source has an incoming edge and whose target has an outgoing edge.
  auto source = [&](const Window& x) { return direction == Axis::Horizontal ? x.leftmost_column() : x.row(0); };
  auto target = [&](const Window& x) {
    return direction == Axis::Horizontal ? x.rightmost_column() : x.row(x.rows() - 1);
  };
  std::vector<Window> cur = w;
  sort_unique(cur);
  for (;;) {
    std::map<Word, int> in, out;
    for (const auto& x : cur) {
      ++out[source(x)];
      ++in[target(x)];
    }
    std::vector<Window> next;
    for (const auto& x : cur)
      if (in.count(source(x)) && out.count(target(x))) next.push_back(x);
    if (next.size() == cur.size()) return cur;
    cur = std::move(next);
  }
}

PairSet nondeadend(const PairSet& w, Axis direction) {
  return PairSet{w.axis, w.width, w.shear, nondeadend(w.members, direction)};
}

}  // namespace sesqui
