#include <doctest.h>

#include "sesqui/join.hpp"
#include "sesqui/tables.hpp"
#include "sesqui/zprobe.hpp"

using namespace sesqui;

namespace {

ProbeResult probe(std::vector<std::string> cs, int depth, int width, std::optional<int> origin = std::nullopt) {
  std::vector<ColumnConstraint> parsed;
  for (const auto& c : cs) parsed.push_back(parse_constraint(c));
  return emptiness_probe(parsed, depth, width, origin);
}

}  // namespace

TEST_SUITE("zprobe") {
  TEST_CASE("one-column 012 pairs") {
    auto i = build_I012();
    CHECK(i.size() == 6);
    for (const auto& w : i.members) {
      CHECK(pair_family(1, Shear::Straight).contains(w));
      CHECK(all_in(w.rightmost_column(), k012));
    }
  }

  TEST_CASE("non-dead-end 012 pairs snapshot") {
    auto p = nondeadend_012_pairs();
    CHECK(p.size() == 10);
    for (const auto& w : p.members) CHECK(all_in(w.rightmost_column(), k012));
    CHECK(nondeadend(p, Axis::Vertical) == p);
    auto tables = factor_h(p, Unique::Bottom);
    REQUIRE(tables.size() == 4);
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (const auto& t : tables) shapes.emplace_back(t.tops.size(), t.bottoms.size());
    std::sort(shapes.begin(), shapes.end());
    CHECK(shapes == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 1}, {2, 1}, {4, 1}});
  }

  TEST_CASE("digit intervals at sixths") {
    CHECK(digit_interval(Rational(0)) == 0);
    for (int k = 0; k < 6; ++k) {
      Rational x(k, 6);
      CHECK(digit_interval(x) == k);
      CHECK(in_lower_half(x) == (k <= 2));
      CHECK(in_sixth_target(x) == (k == 0 || k == 2 || k == 3));
      if (k > 0) {
        Rational below = x - Rational(1, 1000000);
        CHECK(digit_interval(below) == k - 1);
        CHECK(in_sixth_target(below) == (k - 1 == 0 || k - 1 == 2 || k - 1 == 3));
      }
    }
    CHECK_THROWS(digit_interval(Rational(1)));
    CHECK_THROWS(digit_interval(Rational(-1, 6)));
  }

  TEST_CASE("sixth shift") {
    std::vector<Rational> xs{Rational(0), Rational(1, 2), Rational(7, 3)};
    auto r = verify_sixth_shift(xs, 10, 1);
    CHECK(r.ok());
    CHECK(r.vacuous == 2);  // 1/2 and 7/3 start outside [0, 1/2)
    CHECK(r.checked == 1);
  }

  TEST_CASE("sampling is reproducible") {
    auto a = sample_xi(50, 20, 3);
    auto b = sample_xi(50, 20, 3);
    CHECK(a == b);
    auto r = verify_sixth_shift(a, 20, 1);
    CHECK(r.ok());
    CHECK(r.checked == 25);
  }

  TEST_CASE("constraint parsing") {
    auto c = parse_constraint("-1:012");
    CHECK(c.position == -1);
    CHECK(c.allowed == k012);
    CHECK_THROWS(parse_constraint("-1"));
    CHECK_THROWS(parse_constraint("0:"));
  }

  TEST_CASE("unconstrained probe finds the zero stack") {
    auto r = probe({}, 4, 2);
    CHECK(r.verdict == Verdict::NoObstruction);
    REQUIRE(r.witness.size() == 5);
    for (const auto& row : r.witness) CHECK(row == Word(2, 0));
    CHECK(verify_certificate(r).ok());
  }

  TEST_CASE("contradictory column") {
    auto r = probe({"0:02", "0:12345"}, 8, 1);
    CHECK(r.verdict == Verdict::Empty);
    CHECK(r.depth == 0);
    CHECK(r.initial.empty());
    CHECK(verify_certificate(r).ok());
  }

  TEST_CASE("fractional column over 012 at width 2") {
    auto r = probe({"-1:012"}, 8, 2);
    CHECK(r.verdict == Verdict::NoObstruction);
    REQUIRE(r.trace.size() >= 3);
    CHECK(r.trace[0] == 36);
    CHECK(r.trace[1] == 10);
    CHECK(r.trace[2] == 10);
    CHECK(verify_certificate(r).ok());
  }

  TEST_CASE("units over 023 with a 45 column above them") {
    auto r = probe({"0:023", "1:45"}, 8, 2, 0);
    CHECK(r.verdict == Verdict::Empty);
    CHECK(r.depth == 2);
    CHECK(r.trace == std::vector<std::size_t>{3, 1, 0});
    CHECK(verify_certificate(r).ok());
  }

  TEST_CASE("012 fractional column with a 15 units column") {
    for (int w = 2; w <= 4; ++w) {
      auto r = probe({"-1:012", "0:15"}, 8, w);
      CHECK(r.verdict == Verdict::Empty);
      CHECK(r.depth == 1);
      CHECK(verify_certificate(r).ok());
    }
  }

  TEST_CASE("tampered certificates are rejected") {
    auto r = probe({"0:023", "1:45"}, 8, 2, 0);
    auto bad_trace = r;
    bad_trace.trace = {3, 0};
    CHECK_FALSE(verify_certificate(bad_trace).trace_reproduced);
    auto missing = r;
    missing.initial.pop_back();
    CHECK_FALSE(verify_certificate(missing).initial_complete);

    auto ok = probe({}, 3, 2);
    ok.witness[1] = parse_row("11");
    CHECK_FALSE(verify_certificate(ok).witness_legal);
  }

  TEST_CASE("legal pairs") {
    CHECK(pair_is_legal(Word{0, 0}, Word{0, 0}));
    CHECK(pair_is_legal(Word{0, 1}, Word{3, 1}));  // 10 over 13: six to nine
    CHECK_FALSE(pair_is_legal(Word{0, 1}, Word{0, 1}));
  }

  TEST_CASE("probe bounds") {
    CHECK_THROWS(probe({"-1:012"}, 8, 1, 0));  // constraint outside the window
    CHECK_THROWS(probe({}, 8, kMaxProbeWidth + 1));
    CHECK_THROWS(probe({}, kMaxProbeDepth + 1, 2));
  }
}
