#pragma once

#include "skein/bracket.hpp"

#include <cstddef>
#include <memory>
#include <string>

namespace skein {

struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

struct TangleExpr;
using ExprPtr = std::shared_ptr<const TangleExpr>;

// Tangle expression tree. Twist carries n >= 1 ([0] is its own node);
// inv_twist is the rotated twist so parsed trees stay close to the input.
struct TangleExpr {
  enum class Kind { zero, infinity, twist, inv_twist, hsum, vsum, inverse, connect, rep };

  Kind kind;
  std::size_t n = 0;                  // twist, inv_twist, rep
  ExprPtr left{}, right{};            // hsum/vsum children; left alone for inverse/connect/rep
  Polynomial knot{};                  // connect: bracket of the spliced knot shadow
  std::optional<KnotId> knot_name{};  // connect: set when the factor is a cataloged class
};

ExprPtr make_zero();
ExprPtr make_infinity();
ExprPtr make_twist(std::size_t n);          // n >= 1
ExprPtr make_inv_twist(std::size_t n);      // n >= 1
ExprPtr make_hsum(ExprPtr l, ExprPtr r);
ExprPtr make_vsum(ExprPtr l, ExprPtr r);
ExprPtr make_inverse(ExprPtr e);
ExprPtr make_connect(ExprPtr e, KnotId k);
ExprPtr make_connect(ExprPtr e, Polynomial knot_bracket);
ExprPtr make_rep(ExprPtr e, std::size_t n);

// Grammar, loosest to tightest: '+' (hsum), '*' (vsum), '#' (connected sum),
// prefix '1/' (rotation). Atoms: [0], [inf], [n], rep(e, n), parentheses.
// '+' and '*' associate left. Throws parse_error.
ExprPtr parse(const std::string& text);

std::string to_string(const ExprPtr& e);

std::size_t crossing_count(const ExprPtr& e);

// Bracket pair by structural recursion: twists unfold as iterated hsum,
// rep uses the closed form for n-fold horizontal sums.
BracketPair bracket_pair(const ExprPtr& e);

}  // namespace skein
