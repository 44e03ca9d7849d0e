#include "skein/bracket.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace skein;

TEST_CASE("hsum composes side by side") {
  // Both halves must smooth to [0] for the whole to be [0]; two [infinity]
  // halves trap a circle, hence the extra factor x on b*b'.
  BracketPair two = hsum(pair_crossing(), pair_crossing());
  CHECK(two == BracketPair{Polynomial{1}, Polynomial{2, 1}});
  BracketPair inf2 = hsum(pair_infinity(), pair_infinity());
  CHECK(inf2 == BracketPair{Polynomial{}, Polynomial{0, 1}});
  CHECK(hsum(pair_zero(), two) == two);

  std::mt19937 rng(21);
  for (int i = 0; i < 50; ++i) {
    BracketPair p = testutil::random_pair(rng, 4);
    BracketPair q = testutil::random_pair(rng, 4);
    BracketPair r = testutil::random_pair(rng, 4);
    CHECK(hsum(p, q) == hsum(q, p));
    CHECK(hsum(hsum(p, q), r) == hsum(p, hsum(q, r)));
    CHECK(hsum(pair_zero(), p) == p);
  }
}

TEST_CASE("inverse swaps components and is an involution") {
  CHECK(inverse(pair_zero()) == pair_infinity());
  CHECK(inverse(pair_crossing()) == pair_crossing());
  std::mt19937 rng(22);
  for (int i = 0; i < 20; ++i) {
    BracketPair p = testutil::random_pair(rng, 4);
    CHECK(inverse(inverse(p)) == p);
    CHECK(inverse(p) == BracketPair{p.b, p.a});
  }
}

TEST_CASE("vsum is hsum conjugated by rotation") {
  std::mt19937 rng(23);
  for (int i = 0; i < 50; ++i) {
    BracketPair p = testutil::random_pair(rng, 4);
    BracketPair q = testutil::random_pair(rng, 4);
    BracketPair v = vsum(p, q);
    CHECK(v == inverse(hsum(inverse(p), inverse(q))));
    CHECK(v.a == p.a * q.b + p.b * q.a + poly_x() * (p.a * q.a));
    CHECK(v.b == p.b * q.b);
    CHECK(vsum(pair_infinity(), p) == p);
  }
  CHECK(vsum(pair_crossing(), pair_crossing()) ==
        BracketPair{Polynomial{2, 1}, Polynomial{1}});
}

TEST_CASE("catalog composites come out of the operations") {
  BracketPair t2 = hsum(pair_crossing(), pair_crossing());
  CHECK(vsum(t2, t2) == BracketPair{Polynomial{4, 3}, Polynomial{4, 4, 1}});     // [2]*[2]
  CHECK(hsum(inverse(t2), inverse(t2)) ==
        BracketPair{Polynomial{4, 4, 1}, Polynomial{4, 3}});                     // 1/[2]+1/[2]
  CHECK(vsum(t2, inverse(t2)) == BracketPair{Polynomial{5, 6, 2}, Polynomial{2, 1}});
  CHECK(hsum(t2, inverse(t2)) == BracketPair{Polynomial{2, 1}, Polynomial{5, 6, 2}});
}

TEST_CASE("connect_knot multiplies both components by the knot over x") {
  BracketPair p = pair_crossing();
  CHECK(connect_knot(p, Polynomial{0, 1, 1}) ==
        BracketPair{Polynomial{1, 1}, Polynomial{1, 1}});
  CHECK_THROWS_AS(connect_knot(p, Polynomial{1, 1}), not_divisible);

  std::mt19937 rng(24);
  for (int i = 0; i < 20; ++i) {
    BracketPair q = testutil::random_pair(rng, 3);
    Polynomial k1 = knot_class(KnotId::K1).bracket;
    Polynomial k2 = knot_class(KnotId::K2).bracket;
    CHECK(connect_knot(connect_knot(q, k1), k2) == connect_knot(connect_knot(q, k2), k1));
    CHECK(state_mass(connect_knot(q, k2)) == state_mass(q) * k2.eval(1));
  }
}

TEST_CASE("hsum_iterate unfolds twists") {
  CHECK(hsum_iterate(pair_crossing(), 0) == pair_zero());
  CHECK(hsum_iterate(pair_crossing(), 1) == pair_crossing());
  CHECK(hsum_iterate(pair_crossing(), 3) ==
        BracketPair{Polynomial{1}, Polynomial{3, 3, 1}});
}

TEST_CASE("state mass is multiplicative and tracks crossings") {
  std::mt19937 rng(25);
  for (int i = 0; i < 50; ++i) {
    BracketPair p = testutil::random_pair(rng, 4);
    BracketPair q = testutil::random_pair(rng, 4);
    CHECK(state_mass(hsum(p, q)) == state_mass(p) * state_mass(q));
    CHECK(state_mass(vsum(p, q)) == state_mass(p) * state_mass(q));
  }
  CHECK(crossing_count(pair_zero()) == 0);
  CHECK(crossing_count(pair_crossing()) == 1);
  CHECK(crossing_count(hsum_iterate(pair_crossing(), 4)) == 4);
  CHECK(!crossing_count(BracketPair{Polynomial{1}, Polynomial{2}}).has_value());
  CHECK(!crossing_count(BracketPair{}).has_value());
  CHECK(!crossing_count(BracketPair{Polynomial{-1}, Polynomial{}}).has_value());
}

TEST_CASE("knot classes are consistent") {
  for (const auto& k : knot_classes()) {
    CHECK(k.bracket.coeff(0) == 0);  // closed shadows always carry a factor x
    CHECK(k.bracket.eval(1) == BigInt(1) << k.crossings);
    CHECK(knot_id_from_name(k.name) == k.id);
    CHECK(knot_id_from_bracket(k.bracket) == k.id);
  }
  CHECK(knot_class(KnotId::K5).bracket == Polynomial{0, 3, 4, 1});
  CHECK(!knot_id_from_name("K7").has_value());
  CHECK(!knot_id_from_name("k1").has_value());
  CHECK(!knot_id_from_bracket(Polynomial{0, 1}).has_value());
}

TEST_CASE("pairs print as a component tuple") {
  CHECK(to_string(BracketPair{Polynomial{3, 2}, Polynomial{2, 1}}) == "(2x+3, x+2)");
  CHECK(to_string(BracketPair{Polynomial{3, 2}, Polynomial{2, 1}}, false) == "(3+2x, 2+x)");
}
