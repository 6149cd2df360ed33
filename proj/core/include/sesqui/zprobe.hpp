#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sesqui/enumerate.hpp"
#include "sesqui/window.hpp"

namespace sesqui {

using Rational = boost::multiprecision::cpp_rational;

// One-column pairs whose digits lie in {0,1,2}.
PairSet build_I012();
// Straight 2 x 2 pairs with right column in {0,1,2}, vertically non-dead-end.
PairSet nondeadend_012_pairs();

// First base-6 digit of x, 0 <= x < 1.
Digit digit_interval(const Rational& x);
Rational fractional_part(const Rational& x);
// [0, 1/2): first digit in {0,1,2}.
bool in_lower_half(const Rational& x);
// [0, 1/6) u [1/3, 2/3): first digit in {0,2,3}.
bool in_sixth_target(const Rational& x);

struct ShiftCounterexample {
  Rational xi;
  int step = 0;
  Rational value;  // fractional part of (xi/6)(3/2)^step
};

struct ShiftReport {
  std::size_t samples = 0;
  std::size_t vacuous = 0;  // hypothesis fails at some step
  std::size_t checked = 0;
  std::vector<ShiftCounterexample> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

// For each xi whose fractional parts {xi (3/2)^i}, 0 <= i <= horizon, stay in
// [0, 1/2): the fractional parts of (xi/6)(3/2)^i stay in [0,1/6) u [1/3,2/3).
ShiftReport verify_sixth_shift(std::span<const Rational> samples, int horizon, int threads = 0);

// Seeded samples in [0, 50): even positions satisfy the hypothesis up to
// the horizon (random descent through the admissible intervals), odd
// positions are uniform rationals with denominators up to 10^6.
std::vector<Rational> sample_xi(std::size_t count, int horizon, std::uint64_t seed);

struct ColumnConstraint {
  int position = 0;  // 0: units digit, -1: first fractional digit
  Alphabet allowed = kAllDigits;
};
ColumnConstraint parse_constraint(const std::string& text);  // "-1:012"

enum class Verdict { Empty, NoObstruction };
std::string_view to_string(Verdict v);

struct ProbeResult {
  Verdict verdict = Verdict::NoObstruction;
  int depth = 0;   // pruning round reaching the empty set, or the probed depth
  int origin = 0;  // position of the rightmost window column
  int width = 0;
  std::vector<ColumnConstraint> constraints;
  // Certificate: constrained pairs and the number surviving each round.
  std::vector<Window> initial;
  std::vector<std::size_t> trace;
  // Rows of a stack of `depth` pairs, top first (NoObstruction only).
  std::vector<Word> witness;
};

inline constexpr int kMaxProbeWidth = 7;
inline constexpr int kMaxProbeDepth = 4096;

// Straight 2 x width pairs, every row meeting the constraints, stacked
// vertically; dead ends are pruned round by round. The window covers
// positions origin .. origin+width-1 (default: the lowest constrained one).
// Empty is a statement about this width only.
ProbeResult emptiness_probe(std::span<const ColumnConstraint> constraints, int depth, int width,
                            std::optional<int> origin = std::nullopt);

struct CertificateCheck {
  bool initial_sound = false;     // every pair legal and constrained
  bool initial_complete = false;  // every legal constrained pair present
  bool trace_reproduced = false;
  bool witness_legal = false;     // vacuous for Empty
  bool ok() const { return initial_sound && initial_complete && trace_reproduced && witness_legal; }
};
// Re-derives the certificate with code independent of the enumerator:
// pairs come from a direct walk over carry states.
CertificateCheck verify_certificate(const ProbeResult& r);

// Legal straight pair (top over bottom) by a direct carry walk.
bool pair_is_legal(std::span<const Digit> top, std::span<const Digit> bottom);

}  // namespace sesqui
