#include "skein/closures.hpp"

#include "skein/expr.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace skein;

namespace {

BracketPair bp(const std::string& text) { return bracket_pair(parse(text)); }

}  // namespace

TEST_CASE("closure names round-trip") {
  CHECK(closure_name(ClosureKind::N) == std::string("N"));
  CHECK(closure_from_name("D") == ClosureKind::D);
  CHECK(closure_from_name("R") == ClosureKind::R);
  CHECK(!closure_from_name("Q").has_value());
}

TEST_CASE("closures of small twists hit the knot classes") {
  CHECK(close(bp("[1]"), ClosureKind::N) == knot_class(KnotId::K1).bracket);
  CHECK(close(bp("[2]"), ClosureKind::N) == knot_class(KnotId::K3).bracket);
  CHECK(close(bp("[2]"), ClosureKind::D) == knot_class(KnotId::K2).bracket);
  CHECK(close(bp("[3]"), ClosureKind::N) == knot_class(KnotId::K5).bracket);
  CHECK(close(bp("[2]#K1"), ClosureKind::N) == knot_class(KnotId::K6).bracket);
  CHECK(close(bp("[1]#K1#K1"), ClosureKind::N) == knot_class(KnotId::K4).bracket);
  CHECK(close(pair_zero(), ClosureKind::N) == Polynomial{0, 0, 1});
  CHECK(close(pair_zero(), ClosureKind::D) == Polynomial{0, 1});
}

TEST_CASE("R is the sum of N and D and rotation swaps them") {
  std::mt19937 rng(31);
  for (int i = 0; i < 60; ++i) {
    BracketPair p = testutil::random_pair(rng, 5);
    CHECK(close(p, ClosureKind::R) == close(p, ClosureKind::N) + close(p, ClosureKind::D));
    CHECK(close(inverse(p), ClosureKind::N) == close(p, ClosureKind::D));
    CHECK(close(inverse(p), ClosureKind::R) == close(p, ClosureKind::R));
  }
}

TEST_CASE("repeat_pair matches iterated hsum") {
  std::mt19937 rng(32);
  for (int i = 0; i < 40; ++i) {
    BracketPair p = testutil::random_pair(rng, 4);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(repeat_pair(p, n) == hsum_iterate(p, n));
  }
  CHECK(repeat_pair(pair_crossing(), 4) == bp("[4]"));
}

TEST_CASE("repeat_closure matches closing the repeated pair") {
  std::mt19937 rng(33);
  for (int i = 0; i < 40; ++i) {
    BracketPair p = testutil::random_pair(rng, 4);
    for (std::size_t n = 0; n <= 5; ++n)
      for (ClosureKind k : {ClosureKind::N, ClosureKind::D, ClosureKind::R})
        CHECK(repeat_closure(p, n, k) == close(repeat_pair(p, n), k));
  }
}

TEST_CASE("repeat_closure closed forms on known inputs") {
  // D of the 4-fold crossing sum is x(1+x)^4.
  CHECK(repeat_closure(bp("[1]"), 4, ClosureKind::D) == Polynomial{0, 1, 4, 6, 4, 1});
  // N of the 2-fold sum of 1/[2]: (2x+2)^2 + (x^2-1)(x+2)^2.
  CHECK(repeat_closure(bp("1/[2]"), 2, ClosureKind::N) == Polynomial{0, 4, 7, 4, 1});
  // Repeating [infinity] stacks circles: D gives x^(n+1).
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(repeat_closure(pair_infinity(), n, ClosureKind::D) == Polynomial::monomial(1, n + 1));
    CHECK(repeat_closure(pair_infinity(), n, ClosureKind::R) ==
          Polynomial::monomial(1, n + 1) + Polynomial::monomial(1, n == 0 ? 2 : n));
  }
  CHECK(repeat_closure(pair_zero(), 7, ClosureKind::D) == Polynomial{0, 1});
  CHECK(repeat_closure(pair_zero(), 7, ClosureKind::N) == Polynomial{0, 0, 1});
}

TEST_CASE("closure of a sum factors through the parts") {
  const Polynomial x = poly_x();
  const Polynomial x2m1{-1, 0, 1};
  std::mt19937 rng(34);
  for (int i = 0; i < 60; ++i) {
    BracketPair p = testutil::random_pair(rng, 4);
    BracketPair q = testutil::random_pair(rng, 4);
    Polynomial pn = close(p, ClosureKind::N), pd = close(p, ClosureKind::D);
    Polynomial qn = close(q, ClosureKind::N), qd = close(q, ClosureKind::D);
    BracketPair s = hsum(p, q);

    CHECK(x * close(s, ClosureKind::D) == pd * qd);
    CHECK(x * x2m1 * close(s, ClosureKind::N) ==
          (pn * qn + pd * qd) * x - (pd * qn + pn * qd));
    CHECK(x * x2m1 * close(s, ClosureKind::R) ==
          pd * qd * (x * x) + (pn * qn + pd * qd) * x - (pd * qn + pn * qd + pd * qd));
  }
}
