#pragma once

#include "skein/bracket.hpp"

namespace skein {

// The three ways to close a tangle into a knot or link shadow: numerator
// (join top ends and bottom ends), denominator (join left and right), and
// their disjoint union R = N + D.
enum class ClosureKind { N, D, R };

const char* closure_name(ClosureKind k);  // "N", "D", "R"
std::optional<ClosureKind> closure_from_name(const std::string& name);

// Bracket of the closed-up shadow:
//   N: x^2 a + x b,  D: x a + x^2 b,  R: (x^2 + x)(a + b).
Polynomial close(const BracketPair& p, ClosureKind kind);

// Pair of the n-fold horizontal sum of p, in closed form:
//   a_n = a^n,  b_n = ((a + x b)^n - a^n) / x.
// Matches hsum_iterate(p, n) for every n >= 0 without the n-fold expansion.
BracketPair repeat_pair(const BracketPair& p, std::size_t n);

// Closure of the n-fold sum, bypassing the pair:
//   D: x (a + x b)^n
//   N: (a + x b)^n + (x^2 - 1) a^n
//   R: (x + 1)(a + x b)^n + (x^2 - 1) a^n
Polynomial repeat_closure(const BracketPair& p, std::size_t n, ClosureKind kind);

}  // namespace skein
