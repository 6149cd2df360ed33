#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sesqui/enumerate.hpp"
#include "sesqui/window.hpp"

namespace sesqui {

// Vertex-labeled digraph; vertices are 0..n-1 in label order, adjacency
// lists sorted and free of duplicates.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const;
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(const std::string& label) const;
  const std::vector<int>& out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& in(int v) const { return in_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  Digraph reversed() const;
  // Every vertex has exactly k in-edges and k out-edges.
  bool regular(std::size_t k) const;

  // Row vertices: labels are row strings; words are kept for convenience.
  std::vector<Word> words;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> out_, in_;
};

// S_n: the 0235 pair family of the selected shear (Up).
inline constexpr Shear kSelectedShear = Shear::Up;
PairSet build_S(int n, Shear shear = kSelectedShear, const EnumerationLimits& limits = {});
// Vertices: rows of S_n; edge (w, w') when w over w' is in S_n.
Digraph build_G(int n, Shear shear = kSelectedShear, const EnumerationLimits& limits = {});
Digraph graph_from_pairs(const PairSet& pairs);
// Correct columns of length 2n-1 over {0,2,3,5}; edges drop the top digit
// and append one at the bottom.
Digraph build_Gamma(int n);

struct FoldMap {
  std::vector<std::pair<int, int>> pairs;  // vertex pairs of the source
  std::vector<int> class_of;               // source vertex -> quotient vertex
  Digraph quotient;
};
class NotPairable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
FoldMap fold(const Digraph& g);

// Color refinement, then backtracking; returns the image of each vertex.
std::optional<std::vector<int>> iso(const Digraph& a, const Digraph& b);
bool is_isomorphism(const Digraph& a, const Digraph& b, const std::vector<int>& map);

// Relabeling every row by x -> 5 - x maps edges to edges.
bool dual_automorphism(const Digraph& g);

std::string to_dot(const Digraph& g, std::string_view name);

}  // namespace sesqui
