#include "skein/shadow.hpp"

#include <doctest.h>

#include <sstream>

using namespace skein;

namespace {

BracketPair bp(const std::string& text) { return bracket_pair(parse(text)); }

BracketPair brute(const std::string& text, std::size_t budget = default_state_budget) {
  return state_sum_tangle(build_diagram(parse(text)), budget);
}

}  // namespace

TEST_CASE("crossingless tangles and the single crossing") {
  CHECK(state_sum_tangle(diagram_zero()) == pair_zero());
  CHECK(state_sum_tangle(diagram_infinity()) == pair_infinity());
  CHECK(state_sum_tangle(diagram_crossing()) == pair_crossing());
}

TEST_CASE("diagram composition matches pair algebra") {
  CHECK(brute("[2]") == bp("[2]"));
  CHECK(brute("[4]") == bp("[4]"));
  CHECK(brute("1/[3]") == bp("1/[3]"));
  CHECK(brute("[2]*[2]") == bp("[2]*[2]"));
  CHECK(brute("[1]+1/[2]+[1]") == bp("[1]+1/[2]+[1]"));
  CHECK(brute("([1]+1/[2])*[1]") == bp("([1]+1/[2])*[1]"));
  CHECK(brute("rep([2],3)") == bp("rep([2],3)"));
  // Two side-by-side [infinity] arcs trap a circle between them.
  CHECK(brute("[inf]+[inf]") == BracketPair{Polynomial{}, Polynomial{0, 1}});
  CHECK(brute("[inf]*[inf]") == pair_infinity());
  CHECK(brute("[0]+[2]") == bp("[2]"));
}

TEST_CASE("spliced knot shadows multiply the bracket through") {
  for (const auto& k : knot_classes()) {
    std::string expr = std::string("[0]#") + k.name;
    CHECK(brute(expr) == connect_knot(pair_zero(), k.bracket));
  }
  CHECK(brute("[2]#K1") == bp("[2]#K1"));
  CHECK(brute("(1/[3])#K1") == bp("(1/[3])#K1"));
  CHECK(brute("[1]#K4") == bp("[1]#K4"));
  CHECK(brute("[1]#K6") == bp("[1]#K6"));
  CHECK(brute("([1]*[2])#K1") == bp("([1]*[2])#K1"));
}

TEST_CASE("closing a diagram matches the closure formulas") {
  for (const char* text : {"[1]", "[3]", "[1]*[2]", "[2]+1/[2]", "[1]#K3"}) {
    ExprPtr e = parse(text);
    BracketPair p = bracket_pair(e);
    for (ClosureKind k : {ClosureKind::N, ClosureKind::D, ClosureKind::R}) {
      ShadowDiagram closed = close_diagram(build_diagram(e), k);
      CHECK(state_sum_knot(closed) == close(p, k));
    }
  }
  CHECK(state_sum_knot(close_diagram(diagram_zero(), ClosureKind::N)) == Polynomial{0, 0, 1});
  CHECK(state_sum_knot(close_diagram(diagram_zero(), ClosureKind::D)) == Polynomial{0, 1});
}

TEST_CASE("rotation spins the boundary a quarter turn") {
  for (const char* text : {"[2]", "[1]*[2]", "[1]+1/[2]"}) {
    ShadowDiagram d = build_diagram(parse(text));
    CHECK(state_sum_tangle(inverse(d)) == inverse(state_sum_tangle(d)));
    CHECK(state_sum_tangle(inverse(inverse(d))) == state_sum_tangle(d));
  }
}

TEST_CASE("state enumeration threads and stays deterministic") {
  // 16 crossings is past the threading threshold.
  ShadowDiagram d = build_diagram(parse("rep([2],8)"));
  REQUIRE(d.crossing_count() == 16);
  BracketPair once = state_sum_tangle(d);
  CHECK(once == repeat_pair(bp("[2]"), 8));
  CHECK(state_sum_tangle(d) == once);
}

TEST_CASE("budget guards the enumeration") {
  CHECK_THROWS_AS(brute("[21]"), budget_exceeded);
  try {
    state_sum_tangle(build_diagram(parse("[3]")), 4);
    FAIL("expected budget_exceeded");
  } catch (const budget_exceeded& e) {
    CHECK(e.crossings == 3);
    CHECK(e.budget == 4);
  }
  CHECK(state_sum_tangle(build_diagram(parse("[3]")), 8) == bp("[3]"));
}

TEST_CASE("diagonal smoothings are rejected") {
  ShadowDiagram d;
  d.tangle = true;
  d.crossings.push_back({0, 1, 2, 3});
  d.ends = {0, 2, 3, 1};  // NE and SE swapped against the planar layout
  d.next_edge = 4;
  validate(d);
  CHECK_THROWS_AS(state_sum_tangle(d), nonplanar_state);
}

TEST_CASE("validate rejects malformed diagrams") {
  ShadowDiagram once;
  once.crossings.push_back({0, 1, 2, 3});
  once.crossings.push_back({0, 1, 2, 4});
  once.next_edge = 5;
  CHECK_THROWS_AS(validate(once), invalid_diagram);

  ShadowDiagram missing = diagram_zero();
  missing.ends[2] = -1;
  CHECK_THROWS_AS(validate(missing), invalid_diagram);

  CHECK_THROWS_AS(state_sum_knot(diagram_zero()), invalid_diagram);
  ShadowDiagram closed;
  CHECK_THROWS_AS(state_sum_tangle(closed), invalid_diagram);
  CHECK_THROWS_AS(hsum(closed, diagram_zero()), invalid_diagram);
  CHECK_THROWS_AS(connect_sum(diagram_zero(), diagram_zero()), invalid_diagram);
  ShadowDiagram empty_factor;
  CHECK_THROWS_AS(connect_sum(diagram_zero(), empty_factor), invalid_diagram);
}

TEST_CASE("diagram files round-trip") {
  for (const char* text : {"[1]", "[2]*[2]", "[inf]+[inf]", "[1]#K2"}) {
    ShadowDiagram d = build_diagram(parse(text));
    std::stringstream buf;
    write_diagram(d, buf);
    ShadowDiagram back = read_diagram(buf);
    CHECK(back.tangle == d.tangle);
    CHECK(back.crossing_count() == d.crossing_count());
    CHECK(back.loops == d.loops);
    CHECK(state_sum_tangle(back) == state_sum_tangle(d));
  }
  ShadowDiagram knot = close_diagram(build_diagram(parse("[2]")), ClosureKind::N);
  std::stringstream buf;
  write_diagram(knot, buf);
  CHECK(buf.str().rfind("knot\n", 0) == 0);
  CHECK(state_sum_knot(read_diagram(buf)) == Polynomial{0, 2, 2});
}

TEST_CASE("written single crossing uses compact labels") {
  std::stringstream buf;
  write_diagram(diagram_crossing(), buf);
  CHECK(buf.str() == "tangle\nX 0 1 2 3\nE NW 0\nE NE 1\nE SW 3\nE SE 2\n");
  std::stringstream loops;
  write_diagram(build_diagram(parse("[inf]+[inf]")), loops);
  CHECK(loops.str().find("O 1\n") != std::string::npos);
}

TEST_CASE("read_diagram accepts comments and rejects bad records") {
  std::stringstream good("# a lone circle next to a crossingless tangle\ntangle\n"
                         "E NW 0\nE NE 0\nE SW 1\nE SE 1\nO 1\n");
  ShadowDiagram d = read_diagram(good);
  CHECK(d.loops == 1);
  CHECK(state_sum_tangle(d) == BracketPair{Polynomial{0, 1}, Polynomial{}});

  auto rejects = [](const std::string& text) {
    std::stringstream in(text);
    CHECK_THROWS_AS(read_diagram(in), invalid_diagram);
  };
  rejects("");
  rejects("X 0 1 2 3\n");
  rejects("tangle\nE NW 0\n");
  rejects("knot\nE NW 0\nE NE 0\nE SW 1\nE SE 1\n");
  rejects("tangle\nE NW 0\nE NW 0\nE SW 1\nE SE 1\n");
  rejects("tangle\nE UP 0\nE NE 0\nE SW 1\nE SE 1\n");
  rejects("knot\nX 0 1 2\n");
  rejects("knot\nX 0 1 2 3\nX 0 1 2 3\nX 0 1 2 3\n");
  rejects("knot\nY 0 1 2 3\n");
  rejects("knot\nX 0 1 2 3\nX 0 1 2 3\nO -1\n");
}
