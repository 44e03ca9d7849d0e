#pragma once

#include "skein/closures.hpp"
#include "skein/expr.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace skein {

struct oracle_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_exceeded : oracle_error {
  budget_exceeded(std::size_t crossings_, std::size_t budget_)
      : oracle_error("state count 2^" + std::to_string(crossings_) + " exceeds budget " +
                     std::to_string(budget_)),
        crossings(crossings_),
        budget(budget_) {}
  std::size_t crossings;
  std::size_t budget;
};

// A smoothing state connected NW to SE (or NE to SW): the diagram was not
// a planar tangle shadow.
struct nonplanar_state : oracle_error {
  using oracle_error::oracle_error;
};

struct invalid_diagram : oracle_error {
  using oracle_error::oracle_error;
};

enum class End { NW = 0, NE = 1, SW = 2, SE = 3 };

// Planar shadow diagram: 4-valent vertices (crossings) joined by edges,
// optionally with four boundary endpoints. Each crossing names its four
// incident edges in cyclic order around the vertex, so a smoothing either
// joins slots (0,1)(2,3) or (1,2)(3,0). Edge labels each appear exactly
// twice across crossing slots and endpoints. Circles that touch no
// crossing cannot be written as edges and are counted in loops.
struct ShadowDiagram {
  std::vector<std::array<int, 4>> crossings;
  bool tangle = false;
  std::array<int, 4> ends{-1, -1, -1, -1};  // indexed by End; tangle only
  int loops = 0;
  int next_edge = 0;  // edge labels used so far live in [0, next_edge)

  std::size_t crossing_count() const { return crossings.size(); }
};

// Throws invalid_diagram unless every edge label appears exactly twice and
// the endpoint set matches the tangle flag.
void validate(const ShadowDiagram& d);

// Crossingless tangles and the one-crossing tangle.
ShadowDiagram diagram_zero();
ShadowDiagram diagram_infinity();
ShadowDiagram diagram_crossing();

// Tangle composition mirrors the pair operations of the same names.
ShadowDiagram hsum(const ShadowDiagram& a, const ShadowDiagram& b);
ShadowDiagram vsum(const ShadowDiagram& a, const ShadowDiagram& b);
ShadowDiagram inverse(ShadowDiagram d);  // quarter-turn rotation
// Splice a closed diagram into the strand at the SW endpoint.
ShadowDiagram connect_sum(ShadowDiagram t, const ShadowDiagram& knot);

// Join the tangle's endpoints: N top-to-top and bottom-to-bottom, D left
// and right; R closes N after one extra crossing is summed on, which has
// the same bracket as <N> + <D>.
ShadowDiagram close_diagram(ShadowDiagram d, ClosureKind kind);

// Diagram of a tangle expression. Connected sums splice stored closure
// recipes for K1..K6; a connect node with any other knot bracket (beyond
// the trivial x) has no diagram and raises oracle_error.
ShadowDiagram build_diagram(const ExprPtr& e);

constexpr std::size_t default_state_budget = std::size_t(1) << 20;

// Brute-force bracket by enumerating all 2^c smoothings and counting the
// circles of each. Throws budget_exceeded when 2^c would pass the budget,
// invalid_diagram when the endpoint set does not match the call.
Polynomial state_sum_knot(const ShadowDiagram& d, std::size_t budget = default_state_budget);
BracketPair state_sum_tangle(const ShadowDiagram& d, std::size_t budget = default_state_budget);

// Text form: header "tangle" or "knot", one "X a b c d" line per crossing
// (cyclic slot order), "E NW e" lines for endpoints, optional "O n" line
// for crossing-free circles. Labels are compacted on write.
void write_diagram(const ShadowDiagram& d, std::ostream& out);
ShadowDiagram read_diagram(std::istream& in);

}  // namespace skein
