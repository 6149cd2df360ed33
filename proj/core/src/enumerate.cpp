#include "sesqui/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "sesqui/parallel.hpp"

namespace sesqui {

namespace {

constexpr int kMaxRows = 8;
constexpr std::int8_t kFree = -1;

// next_carry[c][a][b]: carry code after the step, or -1.
struct StepTable {
  std::array<std::array<std::array<std::int8_t, 6>, 6>, kCarryStates> next{};
  // Lower digits compatible with (carry, upper digit): at most two.
  std::array<std::array<std::array<Digit, 2>, 6>, kCarryStates> lower{};
  std::array<std::array<std::uint8_t, 6>, kCarryStates> lower_count{};

  StepTable() {
    for (int c = 0; c < kCarryStates; ++c)
      for (Digit a = 0; a < 6; ++a) {
        lower_count[c][a] = 0;
        for (Digit b = 0; b < 6; ++b) {
          auto n = carry_step(CarryState::from_code(c), a, b);
          next[c][a][b] = n ? static_cast<std::int8_t>(n->code()) : std::int8_t{-1};
          if (n) lower[c][a][lower_count[c][a]++] = b;
        }
      }
  }
};

const StepTable& steps() {
  static const StepTable t;
  return t;
}

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & b[k]) return true;
  return false;
}

// Product of the carry transducer over `rows` stacked rows. A state is the
// tuple of rows-1 carry codes, packed base 6 (pair k at weight 6^k).
class ProductSpace {
 public:
  explicit ProductSpace(int rows) : rows_(rows) {
    size_ = 1;
    for (int k = 0; k + 1 < rows; ++k) size_ *= kCarryStates;
    pow_.resize(static_cast<std::size_t>(std::max(rows, 1)));
    for (std::size_t k = 0, p = 1; k < pow_.size(); ++k, p *= kCarryStates) pow_[k] = p;
    compute_infinite();
  }

  int rows() const { return rows_; }
  std::size_t size() const { return size_; }
  std::size_t words() const { return (size_ + 63) / 64; }
  const Bits& right_infinite() const { return bw_; }
  const Bits& left_infinite() const { return fw_; }

  // Calls emit(next_state, column_digits) for every column consistent with `spec`.
  template <class F>
  void successors(std::size_t state, const std::array<std::int8_t, kMaxRows>& spec, F&& emit) const {
    std::array<int, kMaxRows> carry{};
    for (int k = 0; k + 1 < rows_; ++k) carry[static_cast<std::size_t>(k)] = static_cast<int>((state / pow_[static_cast<std::size_t>(k)]) % kCarryStates);
    std::array<Digit, kMaxRows> digits{};
    auto go = [&](auto&& self, int k, std::size_t acc) -> void {
      if (k == rows_) {
        emit(acc, digits);
        return;
      }
      const auto& t = steps();
      int c = carry[static_cast<std::size_t>(k - 1)];
      Digit above = digits[static_cast<std::size_t>(k - 1)];
      for (int q = 0; q < t.lower_count[c][above]; ++q) {
        Digit b = t.lower[c][above][q];
        if (spec[static_cast<std::size_t>(k)] != kFree && spec[static_cast<std::size_t>(k)] != b) continue;
        digits[static_cast<std::size_t>(k)] = b;
        auto nc = static_cast<std::size_t>(t.next[c][above][b]);
        self(self, k + 1, acc + nc * pow_[static_cast<std::size_t>(k - 1)]);
      }
    };
    for (Digit d = 0; d < 6; ++d) {
      if (spec[0] != kFree && spec[0] != d) continue;
      digits[0] = d;
      go(go, 1, 0);
    }
  }

 private:
  void compute_infinite() {
    std::array<std::int8_t, kMaxRows> free{};
    free.fill(kFree);
    std::vector<std::vector<std::uint32_t>> succ(size_), pred(size_);
    for (std::size_t p = 0; p < size_; ++p) {
      auto& out = succ[p];
      successors(p, free, [&](std::size_t q, const auto&) { out.push_back(static_cast<std::uint32_t>(q)); });
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      for (auto q : out) pred[q].push_back(static_cast<std::uint32_t>(p));
    }
    fw_ = prune(succ, pred);
    bw_ = prune(pred, succ);
  }

  // Greatest set in which every state keeps an edge of `out` inside the set.
  Bits prune(const std::vector<std::vector<std::uint32_t>>& out, const std::vector<std::vector<std::uint32_t>>& in) const {
    std::vector<std::uint32_t> degree(size_);
    std::vector<std::uint32_t> queue;
    std::vector<bool> alive(size_, true);
    for (std::size_t p = 0; p < size_; ++p) {
      degree[p] = static_cast<std::uint32_t>(out[p].size());
      if (degree[p] == 0) queue.push_back(static_cast<std::uint32_t>(p));
    }
    while (!queue.empty()) {
      auto p = queue.back();
      queue.pop_back();
      if (!alive[p]) continue;
      alive[p] = false;
      for (auto q : in[p])
        if (alive[q] && --degree[q] == 0) queue.push_back(q);
    }
    Bits b(words(), 0);
    for (std::size_t p = 0; p < size_; ++p)
      if (alive[p]) b[p / 64] |= 1ull << (p % 64);
    return b;
  }

  int rows_;
  std::size_t size_;
  std::vector<std::size_t> pow_;
  Bits fw_, bw_;
};

const ProductSpace& product_space(int rows) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ProductSpace>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[rows];
  if (!slot) slot = std::make_unique<ProductSpace>(rows);
  return *slot;
}

struct Layout {
  int rows = 0;  // of the enclosing rectangle
  int cols = 0;
  // For each rectangle column, the rectangle rows that carry window cells.
  std::vector<std::vector<int>> specified;
  // Window cell (i, j) -> rectangle (r, c).
  std::vector<std::pair<int, int>> cell;
  int n = 0, m = 0;
};

Layout make_layout(int n, int m, Shear shear) {
  Layout L;
  L.n = n;
  L.m = m;
  int rmin = 1 << 20, rmax = -(1 << 20);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      auto g = shear_map(shear, i, j);
      rmin = std::min(rmin, g.r);
      rmax = std::max(rmax, g.r);
    }
  L.rows = rmax - rmin + 1;
  L.cols = m;
  L.specified.assign(static_cast<std::size_t>(m), {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      auto g = shear_map(shear, i, j);
      L.cell.emplace_back(g.r - rmin, g.c);
      L.specified[static_cast<std::size_t>(g.c)].push_back(g.r - rmin);
    }
  for (auto& s : L.specified) std::sort(s.begin(), s.end());
  return L;
}

// Column-by-column search over sets of product states. From a set, one pass
// over its states yields every reachable assignment of the column's window
// cells together with the successor set.
class ColumnSearch {
 public:
  ColumnSearch(const ProductSpace& space, const Layout& layout, Shear shear)
      : space_(space), layout_(layout), shear_(shear) {
    values_.assign(static_cast<std::size_t>(layout.rows * layout.cols), 0);
  }

  // Assignments of column 0 reachable from the right-infinite states.
  std::vector<std::pair<std::size_t, Bits>> first_column() {
    return expand_raw(space_.right_infinite(), 0);
  }

  void run_from(std::size_t first, const Bits& set, std::vector<Window>& out) {
    assign(0, first);
    dfs(1, intern(set), out);
  }

 private:
  void assign(int col, std::size_t index) {
    for (int r : layout_.specified[static_cast<std::size_t>(col)]) {
      values_[static_cast<std::size_t>(r * layout_.cols + col)] = static_cast<Digit>(index % 6);
      index /= 6;
    }
  }

  std::vector<std::pair<std::size_t, Bits>> expand_raw(const Bits& from, int col) const {
    std::array<std::int8_t, kMaxRows> free{};
    free.fill(kFree);
    const auto& rows = layout_.specified[static_cast<std::size_t>(col)];
    std::map<std::size_t, Bits> next;
    for (std::size_t w = 0; w < from.size(); ++w) {
      for (std::uint64_t bits = from[w]; bits; bits &= bits - 1) {
        std::size_t p = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        space_.successors(p, free, [&](std::size_t q, const std::array<Digit, kMaxRows>& digits) {
          std::size_t index = 0;
          for (auto r = rows.rbegin(); r != rows.rend(); ++r) index = index * 6 + digits[static_cast<std::size_t>(*r)];
          auto& b = next[index];
          if (b.empty()) b.assign(space_.words(), 0);
          b[q / 64] |= 1ull << (q % 64);
        });
      }
    }
    return {next.begin(), next.end()};
  }

  const std::vector<std::pair<std::size_t, int>>& expand(int set, int col) {
    auto key = (static_cast<std::uint64_t>(set) << 8) | static_cast<std::uint64_t>(col);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<std::pair<std::size_t, int>> out;
    for (auto& [index, bits] : expand_raw(sets_[static_cast<std::size_t>(set)], col)) out.emplace_back(index, intern(bits));
    return memo_.emplace(key, std::move(out)).first->second;
  }

  void dfs(int col, int set, std::vector<Window>& out) {
    if (col == layout_.cols) {
      if (intersects(sets_[static_cast<std::size_t>(set)], space_.left_infinite())) out.push_back(emit());
      return;
    }
    // Copy: recursion may rehash the memo.
    auto next = expand(set, col);
    for (auto [index, id] : next) {
      assign(col, index);
      dfs(col + 1, id, out);
    }
  }

  Window emit() const {
    Window w(layout_.n, layout_.m, shear_);
    std::size_t k = 0;
    for (int i = 0; i < layout_.n; ++i)
      for (int j = 0; j < layout_.m; ++j, ++k) {
        auto [r, c] = layout_.cell[k];
        w.set(i, j, values_[static_cast<std::size_t>(r * layout_.cols + c)]);
      }
    return w;
  }

  int intern(const Bits& b) {
    auto [it, fresh] = ids_.try_emplace(b, static_cast<int>(sets_.size()));
    if (fresh) sets_.push_back(b);
    return it->second;
  }

  const ProductSpace& space_;
  const Layout& layout_;
  Shear shear_;
  std::vector<Digit> values_;
  std::vector<Bits> sets_;
  std::unordered_map<Bits, int, BitsHash> ids_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::size_t, int>>> memo_;
};

}  // namespace

GridPoint shear_map(Shear shear, int i, int j) {
  switch (shear) {
    case Shear::Straight: return {i, j};
    case Shear::Up: return {i + j, j};
    case Shear::Down: return {i - j, j};
  }
  return {i, j};
}

std::vector<Window> enumerate_windows(int n, int m, Shear shear, const EnumerationLimits& limits) {
  if (n < 1 || m < 1) throw std::invalid_argument("window shape must be positive");
  Layout layout = make_layout(n, m, shear);
  if (layout.rows > kMaxRows) throw BoundExceeded("enclosing rectangle has too many rows");
  std::size_t states = 1;
  for (int k = 0; k + 1 < layout.rows; ++k) states *= kCarryStates;
  if (states > limits.max_product_states)
    throw BoundExceeded("transfer state space " + std::to_string(states) + " exceeds bound " +
                        std::to_string(limits.max_product_states));
  const ProductSpace& space = product_space(layout.rows);

  auto first = ColumnSearch(space, layout, shear).first_column();
  std::vector<std::vector<Window>> parts(first.size());
  int threads = limits.threads > 0 ? limits.threads : default_threads();
  parallel_for(first.size(), threads, [&](std::size_t a) {
    ColumnSearch search(space, layout, shear);
    search.run_from(first[a].first, first[a].second, parts[a]);
  });
  std::vector<Window> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  sort_unique(out);
  return out;
}

PairSet pair_family(int n, Shear shear, const EnumerationLimits& limits) {
  return PairSet::make(Axis::Horizontal, shear, n, enumerate_windows(2, n, shear, limits));
}

PairSet pair_family_0235(int n, Shear shear, const EnumerationLimits& limits) {
  return restrict_rightmost(pair_family(n, shear, limits), k0235);
}

Window trapezoid_oracle(std::span<const Digit> top, int n) {
  int width = static_cast<int>(top.size());
  int m = width - 2 * (n - 1);
  if (n < 1 || m < 1) throw std::invalid_argument("top row too short for the trapezoid");
  if (width > 22) throw BoundExceeded("trapezoid top row too wide");
  std::vector<Word> rows{Word(top.begin(), top.end())};
  for (int k = 1; k < n; ++k) {
    const Word& cur = rows.back();
    // Value of the trimmed row, zeros outside; digit t of (3/2) * value,
    // t counted from the row's own rightmost position.
    std::uint64_t v = 0;  // 3 * 6^22 < 2^64
    for (std::size_t q = cur.size(); q-- > 0;) v = v * 6 + cur[q];
    v *= 3;
    Word next;
    std::uint64_t scale = 2 * 6;
    for (std::size_t t = 1; t + 1 < cur.size(); ++t, scale *= 6) next.push_back(static_cast<Digit>((v / scale) % 6));
    rows.push_back(std::move(next));
  }
  // Row k spans positions k .. width-1-k; the core is positions n-1 .. n+m-2.
  Window w(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      w.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1 + j - i)]);
  return w;
}

std::vector<Window> oracle_windows(int n, int m, int threads) {
  int width = m + 2 * (n - 1);
  if (width > 10) throw BoundExceeded("oracle top row width " + std::to_string(width) + " exceeds 10");
  std::size_t total = 1;
  for (int k = 0; k < width; ++k) total *= 6;
  // Slice on the leading two digits.
  std::size_t slices = std::min<std::size_t>(36, total);
  std::size_t per = total / slices;
  std::vector<std::vector<Window>> parts(slices);
  parallel_for(slices, threads > 0 ? threads : default_threads(), [&](std::size_t s) {
    Word top(static_cast<std::size_t>(width));
    std::vector<Window> local;
    for (std::size_t x = s * per; x < (s + 1) * per; ++x) {
      std::size_t y = x;
      for (auto& d : top) {
        d = static_cast<Digit>(y % 6);
        y /= 6;
      }
      local.push_back(trapezoid_oracle(top, n));
    }
    sort_unique(local);
    parts[s] = std::move(local);
  });
  std::vector<Window> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  sort_unique(out);
  return out;
}

}  // namespace sesqui
