#include "skein/poly.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace skein;

TEST_CASE("zero polynomial has no degree and empty coefficients") {
  Polynomial z;
  CHECK(z.is_zero());
  CHECK(!z.degree().has_value());
  CHECK(z.coeff(0) == 0);
  CHECK(z.coeff(7) == 0);
  CHECK(Polynomial{0, 0, 0} == z);
  CHECK(Polynomial::constant(0) == z);
  CHECK(Polynomial::monomial(0, 5) == z);
}

TEST_CASE("construction trims trailing zeros") {
  Polynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(p == Polynomial{1, 2});
  CHECK(p.lead() == 2);
  CHECK(Polynomial::monomial(3, 2) == Polynomial{0, 0, 3});
}

TEST_CASE("ring operations agree with evaluation") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = testutil::random_poly(rng, 6);
    Polynomial q = testutil::random_poly(rng, 6);
    Polynomial r = testutil::random_poly(rng, 6);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == Polynomial{});
    CHECK(p + (-p) == Polynomial{});
    for (long long x : {-3, -1, 0, 2, 5}) {
      CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
      CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    }
  }
}

TEST_CASE("pow is iterated multiplication") {
  Polynomial p{1, 1};
  CHECK(pow(p, 0) == Polynomial{1});
  CHECK(pow(p, 1) == p);
  CHECK(pow(p, 4) == Polynomial{1, 4, 6, 4, 1});
  CHECK(pow(Polynomial{}, 0) == Polynomial{1});
  CHECK(pow(Polynomial{}, 3) == Polynomial{});
  Polynomial q{-2, 0, 3};
  CHECK(pow(q, 5) == q * q * q * q * q);
}

TEST_CASE("div_by_x_exact shifts degrees down") {
  CHECK(div_by_x_exact(Polynomial{0, 1, 2}) == Polynomial{1, 2});
  CHECK(div_by_x_exact(Polynomial{}) == Polynomial{});
  CHECK_THROWS_AS(div_by_x_exact(Polynomial{1, 1}), not_divisible);
}

TEST_CASE("div_exact inverts multiplication and rejects non-divisors") {
  std::mt19937 rng(12);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = testutil::random_poly(rng, 5);
    Polynomial q = testutil::random_poly(rng, 5);
    if (q.is_zero()) continue;
    CHECK(div_exact(p * q, q) == p);
  }
  CHECK_THROWS_AS(div_exact(Polynomial{1, 1, 1}, Polynomial{1, 1}), not_divisible);
  CHECK_THROWS_AS(div_exact(Polynomial{0, 1}, Polynomial{0, 2}), not_divisible);
  CHECK_THROWS_AS(div_exact(Polynomial{1}, Polynomial{}), not_divisible);
  CHECK(div_exact(Polynomial{}, Polynomial{3, 1}) == Polynomial{});
}

TEST_CASE("gcd is a common divisor with positive lead") {
  CHECK(gcd(Polynomial{}, Polynomial{}) == Polynomial{});
  CHECK(gcd(Polynomial{2, 2}, Polynomial{}) == Polynomial{2, 2});
  CHECK(gcd(Polynomial{}, Polynomial{-1, -1}) == Polynomial{1, 1});
  CHECK(gcd(Polynomial{2, 2}, Polynomial{4, 8, 4}) == Polynomial{2, 2});
  CHECK(gcd(Polynomial{6}, Polynomial{4}) == Polynomial{2});
  CHECK(gcd(Polynomial{1, 1}, Polynomial{2, 1}) == Polynomial{1});

  std::mt19937 rng(13);
  for (int i = 0; i < 60; ++i) {
    Polynomial p = testutil::random_poly(rng, 4);
    Polynomial q = testutil::random_poly(rng, 4);
    Polynomial g = gcd(p, q);
    if (g.is_zero()) {
      CHECK(p.is_zero());
      CHECK(q.is_zero());
      continue;
    }
    CHECK(g.lead() > 0);
    CHECK(div_exact(p, g) * g == p);
    CHECK(div_exact(q, g) * g == q);
    // Common factors survive into the gcd.
    Polynomial f{1, 1};
    Polynomial gf = gcd(p * f, q * f);
    CHECK(div_exact(gf, f) * f == gf);
  }
}

TEST_CASE("coeff_row pads to fixed width") {
  Polynomial p{0, 1, 2};
  auto row = coeff_row(p, 4);
  REQUIRE(row.size() == 5);
  CHECK(row[0] == 0);
  CHECK(row[1] == 1);
  CHECK(row[2] == 2);
  CHECK(row[3] == 0);
  CHECK(row[4] == 0);
  CHECK(coeff_row(Polynomial{}, 2) == std::vector<BigInt>{0, 0, 0});
}

TEST_CASE("to_string prints descending by default") {
  CHECK(to_string(Polynomial{}) == "0");
  CHECK(to_string(Polynomial{3}) == "3");
  CHECK(to_string(Polynomial{0, 3, 4, 1}) == "x^3+4x^2+3x");
  CHECK(to_string(Polynomial{0, 3, 4, 1}, false) == "3x+4x^2+x^3");
  CHECK(to_string(Polynomial{-1, 0, 1}) == "x^2-1");
  CHECK(to_string(Polynomial{1, -2}) == "-2x+1");
  CHECK(to_string(Polynomial{0, 1}) == "x");
}
