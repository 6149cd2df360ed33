#include "sesqui/zprobe.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

#include "sesqui/carry.hpp"
#include "sesqui/join.hpp"
#include "sesqui/parallel.hpp"

namespace sesqui {

PairSet build_I012() { return restrict_rightmost(pair_family(1, Shear::Straight), k012); }

PairSet nondeadend_012_pairs() {
  return nondeadend(restrict_rightmost(pair_family(2, Shear::Straight), k012), Axis::Vertical);
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int floor_of(const Rational& x) {
  cpp_int n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
  cpp_int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

}  // namespace

Rational fractional_part(const Rational& x) { return x - Rational(floor_of(x)); }

Digit digit_interval(const Rational& x) {
  if (x < 0 || x >= 1) throw std::invalid_argument("digit_interval needs 0 <= x < 1");
  return static_cast<Digit>(floor_of(x * 6).convert_to<int>());
}

bool in_lower_half(const Rational& x) { return digit_interval(x) <= 2; }

bool in_sixth_target(const Rational& x) {
  Digit d = digit_interval(x);
  return d == 0 || d == 2 || d == 3;
}

ShiftReport verify_sixth_shift(std::span<const Rational> samples, int horizon, int threads) {
  if (horizon < 0) throw std::invalid_argument("horizon must be non-negative");
  ShiftReport r;
  r.samples = samples.size();
  std::vector<int> status(samples.size(), 0);  // 0 vacuous, 1 checked
  std::vector<std::optional<ShiftCounterexample>> found(samples.size());
  const Rational factor(3, 2);
  parallel_for(samples.size(), threads > 0 ? threads : default_threads(), [&](std::size_t k) {
    Rational x = samples[k];
    for (int i = 0; i <= horizon; ++i, x *= factor)
      if (!in_lower_half(fractional_part(x))) return;
    status[k] = 1;
    Rational z = samples[k] / 6;
    for (int i = 0; i <= horizon; ++i, z *= factor) {
      Rational f = fractional_part(z);
      if (!in_sixth_target(f)) {
        found[k] = ShiftCounterexample{samples[k], i, f};
        return;
      }
    }
  });
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (status[k])
      ++r.checked;
    else
      ++r.vacuous;
    if (found[k]) r.counterexamples.push_back(*found[k]);
  }
  return r;
}

namespace {

// Random descent: keep a subinterval of [lo, hi) on which every fractional
// part up to `horizon` lies in [0, 1/2).
std::optional<Rational> descend(std::mt19937_64& rng, int i, int horizon, const Rational& lo, const Rational& hi,
                                const Rational& scale, std::size_t& budget) {
  if (i > horizon) return (lo + hi) / 2;
  if (budget == 0) return std::nullopt;
  --budget;
  Rational a = lo * scale, b = hi * scale;
  cpp_int first = floor_of(a), last = floor_of(b);
  std::vector<cpp_int> ks;
  for (cpp_int k = first; k <= last; ++k) ks.push_back(k);
  std::shuffle(ks.begin(), ks.end(), rng);
  for (const auto& k : ks) {
    Rational l = std::max(a, Rational(k)), h = std::min(b, Rational(k) + Rational(1, 2));
    if (l >= h) continue;
    if (auto x = descend(rng, i + 1, horizon, l / scale, h / scale, scale * Rational(3, 2), budget)) return x;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rational> sample_xi(std::size_t count, int horizon, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> out;
  out.reserve(count);
  std::uniform_int_distribution<long> den(1, 1000000);
  while (out.size() < count) {
    if (out.size() % 2 == 0) {
      long top = std::uniform_int_distribution<long>(1, 50)(rng);
      std::size_t budget = 100000;
      if (auto x = descend(rng, 0, horizon, Rational(0), Rational(top), Rational(1), budget)) out.push_back(*x);
    } else {
      long q = den(rng);
      long p = std::uniform_int_distribution<long>(0, 50 * q - 1)(rng);
      out.emplace_back(p, q);
    }
  }
  return out;
}

ColumnConstraint parse_constraint(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("constraint must look like POSITION:DIGITS");
  ColumnConstraint c;
  try {
    std::size_t used = 0;
    c.position = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad column position in '" + text + "'");
  }
  c.allowed = parse_alphabet(text.substr(colon + 1));
  if (c.allowed == 0) throw std::invalid_argument("empty alphabet in '" + text + "'");
  return c;
}

std::string_view to_string(Verdict v) { return v == Verdict::Empty ? "empty" : "no-obstruction"; }

namespace {

// Allowed digits per window column (index 0 = rightmost).
std::vector<Alphabet> column_alphabets(std::span<const ColumnConstraint> constraints, int origin, int width) {
  std::vector<Alphabet> a(static_cast<std::size_t>(width), kAllDigits);
  for (const auto& c : constraints) {
    int j = c.position - origin;
    if (j < 0 || j >= width)
      throw std::invalid_argument("constraint at position " + std::to_string(c.position) + " lies outside the window");
    a[static_cast<std::size_t>(j)] &= c.allowed;
  }
  return a;
}

bool row_allowed(const Word& row, const std::vector<Alphabet>& a) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!allows(a[j], row[j])) return false;
  return true;
}

// One simultaneous sweep: drop pairs whose top row has no pair above it or
// whose bottom row has no pair below it.
std::vector<Window> prune_round(const std::vector<Window>& pairs) {
  std::set<Word> has_above, has_below;
  for (const auto& w : pairs) {
    has_above.insert(w.row(1));
    has_below.insert(w.row(0));
  }
  std::vector<Window> out;
  for (const auto& w : pairs)
    if (has_above.count(w.row(0)) && has_below.count(w.row(1))) out.push_back(w);
  return out;
}

std::vector<Word> find_stack(const std::vector<Window>& pairs, int depth) {
  std::map<Word, std::vector<Word>> below;
  for (const auto& w : pairs) below[w.row(0)].push_back(w.row(1));
  for (auto& [k, v] : below) std::sort(v.begin(), v.end());
  // Longest path (capped at depth) from each row, memoized.
  std::map<Word, int> reach;
  std::set<Word> active;
  auto longest = [&](auto&& self, const Word& r) -> int {
    if (auto it = reach.find(r); it != reach.end()) return it->second;
    if (active.count(r)) return depth;  // on a cycle
    active.insert(r);
    int best = 0;
    if (auto it = below.find(r); it != below.end())
      for (const auto& b : it->second) best = std::max(best, std::min(depth, 1 + self(self, b)));
    active.erase(r);
    reach[r] = best;
    return best;
  };
  for (const auto& [top, bs] : below) {
    if (longest(longest, top) < depth) continue;
    std::vector<Word> stack{top};
    while (static_cast<int>(stack.size()) <= depth) {
      const auto& cur = stack.back();
      auto it = below.find(cur);
      if (it == below.end()) break;
      const Word* next = nullptr;
      int need = depth - static_cast<int>(stack.size());
      for (const auto& b : it->second)
        if (longest(longest, b) >= need) {
          next = &b;
          break;
        }
      if (!next) break;
      stack.push_back(*next);
    }
    if (static_cast<int>(stack.size()) == depth + 1) return stack;
  }
  return {};
}

// Legal constrained pairs by a direct carry walk, right to left.
std::vector<Window> walk_pairs(const std::vector<Alphabet>& a) {
  int width = static_cast<int>(a.size());
  int start = 0;
  for (auto s : recurrent_carry_states()) start |= 1 << s.code();
  std::vector<Window> out;
  Word top(static_cast<std::size_t>(width)), bottom(static_cast<std::size_t>(width));
  auto go = [&](auto&& self, int j, int states) -> void {
    if (j == width) {
      if (states & start) out.push_back(Window({top, bottom}));
      return;
    }
    for (Digit x = 0; x < 6; ++x) {
      if (!allows(a[static_cast<std::size_t>(j)], x)) continue;
      for (Digit y = 0; y < 6; ++y) {
        if (!allows(a[static_cast<std::size_t>(j)], y)) continue;
        int next = 0;
        for (int c = 0; c < kCarryStates; ++c)
          if (states >> c & 1)
            if (auto n = carry_step(CarryState::from_code(c), x, y)) next |= 1 << n->code();
        if (!next) continue;
        top[static_cast<std::size_t>(j)] = x;
        bottom[static_cast<std::size_t>(j)] = y;
        self(self, j + 1, next);
      }
    }
  };
  go(go, 0, start);
  sort_unique(out);
  return out;
}

}  // namespace

bool pair_is_legal(std::span<const Digit> top, std::span<const Digit> bottom) {
  if (top.size() != bottom.size()) return false;
  int start = 0;
  for (auto s : recurrent_carry_states()) start |= 1 << s.code();
  int states = start;
  for (std::size_t j = 0; j < top.size(); ++j) {
    int next = 0;
    for (int c = 0; c < kCarryStates; ++c)
      if (states >> c & 1)
        if (auto n = carry_step(CarryState::from_code(c), top[j], bottom[j])) next |= 1 << n->code();
    states = next;
  }
  return (states & start) != 0;
}

ProbeResult emptiness_probe(std::span<const ColumnConstraint> constraints, int depth, int width, std::optional<int> origin) {
  if (width < 1 || width > kMaxProbeWidth)
    throw BoundExceeded("probe width must be in 1.." + std::to_string(kMaxProbeWidth));
  if (depth < 1 || depth > kMaxProbeDepth)
    throw BoundExceeded("probe depth must be in 1.." + std::to_string(kMaxProbeDepth));
  ProbeResult r;
  r.width = width;
  r.constraints.assign(constraints.begin(), constraints.end());
  if (origin)
    r.origin = *origin;
  else {
    r.origin = 0;
    for (std::size_t k = 0; k < constraints.size(); ++k)
      r.origin = k == 0 ? constraints[k].position : std::min(r.origin, constraints[k].position);
  }
  auto alphabets = column_alphabets(constraints, r.origin, width);

  for (const auto& w : enumerate_windows(2, width, Shear::Straight))
    if (row_allowed(w.row(0), alphabets) && row_allowed(w.row(1), alphabets)) r.initial.push_back(w);
  std::vector<Window> cur = r.initial;
  r.trace.push_back(cur.size());
  for (int round = 1; round <= depth && !cur.empty(); ++round) {
    auto next = prune_round(cur);
    r.trace.push_back(next.size());
    bool stable = next.size() == cur.size();
    cur = std::move(next);
    if (stable) break;
  }
  if (cur.empty()) {
    r.verdict = Verdict::Empty;
    r.depth = static_cast<int>(r.trace.size()) - 1;
    return r;
  }
  r.verdict = Verdict::NoObstruction;
  r.depth = depth;
  r.witness = find_stack(cur, depth);
  return r;
}

CertificateCheck verify_certificate(const ProbeResult& r) {
  CertificateCheck c;
  auto alphabets = column_alphabets(r.constraints, r.origin, r.width);
  c.initial_sound = std::all_of(r.initial.begin(), r.initial.end(), [&](const Window& w) {
    return row_allowed(w.row(0), alphabets) && row_allowed(w.row(1), alphabets) && pair_is_legal(w.row(0), w.row(1));
  });
  c.initial_complete = walk_pairs(alphabets) == r.initial;

  // Fixed-point pruning by row degrees, checked against the trace.
  std::vector<Window> cur = r.initial;
  bool same = !r.trace.empty() && r.trace[0] == cur.size();
  for (std::size_t k = 1; k < r.trace.size() && same; ++k) {
    std::map<Word, int> in, out;
    for (const auto& w : cur) {
      ++out[w.row(0)];
      ++in[w.row(1)];
    }
    std::vector<Window> next;
    std::copy_if(cur.begin(), cur.end(), std::back_inserter(next),
                 [&](const Window& w) { return in[w.row(0)] > 0 && out[w.row(1)] > 0; });
    cur = std::move(next);
    same = cur.size() == r.trace[k];
  }
  c.trace_reproduced = same && (r.verdict == Verdict::Empty) == cur.empty();

  if (r.verdict == Verdict::Empty) {
    c.witness_legal = true;
  } else {
    bool ok = static_cast<int>(r.witness.size()) == r.depth + 1;
    for (const auto& row : r.witness) ok = ok && row_allowed(row, alphabets);
    for (std::size_t k = 0; ok && k + 1 < r.witness.size(); ++k) ok = pair_is_legal(r.witness[k], r.witness[k + 1]);
    c.witness_legal = ok;
  }
  return c;
}

}  // namespace sesqui
