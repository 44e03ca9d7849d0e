#pragma once

#include "skein/poly.hpp"

#include <array>
#include <optional>
#include <string>

namespace skein {

struct invalid_pair : std::domain_error {
  using std::domain_error::domain_error;
};

// Bracket pair (a, b) of a 2-string tangle shadow: the bracket expands as
// a * <[0]> + b * <[infinity]> over the two crossingless tangles.
struct BracketPair {
  Polynomial a;
  Polynomial b;

  bool operator==(const BracketPair& o) const { return a == o.a && b == o.b; }
  bool operator!=(const BracketPair& o) const { return !(*this == o); }
};

inline const BracketPair& pair_zero() {       // [0]
  static const BracketPair p{Polynomial{1}, Polynomial{}};
  return p;
}
inline const BracketPair& pair_infinity() {   // [infinity]
  static const BracketPair p{Polynomial{}, Polynomial{1}};
  return p;
}
inline const BracketPair& pair_crossing() {   // [1], a single crossing
  static const BracketPair p{Polynomial{1}, Polynomial{1}};
  return p;
}

// Horizontal sum A+B (tangles side by side, adjacent ends joined).
BracketPair hsum(const BracketPair& p, const BracketPair& q);

// Vertical stack A*B, carried out as rotate, hsum, rotate back.
BracketPair vsum(const BracketPair& p, const BracketPair& q);

// Quarter-turn rotation 1/A; swaps the two components. An involution.
BracketPair inverse(const BracketPair& p);

// Connected sum with a knot shadow K spliced into one strand: both
// components pick up the factor <K>/x. Throws not_divisible when the
// knot polynomial has a nonzero constant term (no closed diagram does).
BracketPair connect_knot(const BracketPair& p, const Polynomial& knot);

// n-fold horizontal sum of p with itself; n = 0 gives [0].
BracketPair hsum_iterate(const BracketPair& p, std::size_t n);

// Sum of both coefficient masses at x = 1. Equals 2^c for a pair computed
// from a c-crossing tangle (each crossing doubles the smoothing count).
BigInt state_mass(const BracketPair& p);

// Crossing count recovered from state_mass; empty when the mass is not a
// power of two (such a pair cannot come from a tangle shadow).
std::optional<std::size_t> crossing_count(const BracketPair& p);

std::string to_string(const BracketPair& p, bool descending = true);

// The six knot shadow classes with at most three crossings that appear as
// connected-sum factors in the catalog.
enum class KnotId { K1, K2, K3, K4, K5, K6 };

struct KnotClass {
  KnotId id;
  const char* name;       // "K1".."K6"
  Polynomial bracket;
  std::size_t crossings;  // log2 of the bracket's coefficient mass at x = 1
};

const std::array<KnotClass, 6>& knot_classes();
const KnotClass& knot_class(KnotId id);
// Lookup by "K1".."K6"; empty for anything else.
std::optional<KnotId> knot_id_from_name(const std::string& name);
// Reverse lookup by bracket polynomial; empty when no class matches.
std::optional<KnotId> knot_id_from_bracket(const Polynomial& bracket);

}  // namespace skein
