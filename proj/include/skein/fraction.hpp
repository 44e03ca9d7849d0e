#pragma once

#include "skein/catalog.hpp"

namespace skein {

struct both_zero : invalid_pair {
  both_zero() : invalid_pair("bracket pair (0, 0) has no fraction or skeleton") {}
};

// F(A) = b/a as a reduced quotient of integer polynomials, with a single
// point at infinity for a = 0. The denominator keeps a positive leading
// coefficient, so equality is plain member comparison.
class TangleFraction {
 public:
  static TangleFraction infinity();
  // Reduces by the polynomial gcd; den = 0 yields infinity (num must be
  // nonzero then). Both zero is rejected with both_zero.
  static TangleFraction make(Polynomial num, Polynomial den);
  static TangleFraction of(const BracketPair& p) { return make(p.b, p.a); }

  bool is_infinity() const { return inf_; }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool operator==(const TangleFraction& o) const;
  bool operator!=(const TangleFraction& o) const { return !(*this == o); }

 private:
  TangleFraction() = default;
  bool inf_ = false;
  Polynomial num_, den_;
};

// Fraction arithmetic. Infinity propagates through sums and products the
// way the tangle identities need: adding or scaling by a nonzero finite
// value keeps infinity, and reciprocal swaps 0 and infinity. The one
// indeterminate case, infinity times the zero fraction, throws.
TangleFraction add(const TangleFraction& f, const TangleFraction& g);
TangleFraction mul(const TangleFraction& f, const TangleFraction& g);
TangleFraction reciprocal(const TangleFraction& f);
TangleFraction pow(const TangleFraction& f, std::size_t n);
TangleFraction from_poly(const Polynomial& p);  // p / 1

std::string to_string(const TangleFraction& f, bool descending = true);

// Splitting off the knotted part: g = gcd(a, b) normalized positive, the
// skeleton is the pair divided through by g and the spliced knot bracket
// is x * g. Prime means g = 1. F(A) only sees the skeleton.
struct SkeletonReport {
  BracketPair skeleton;
  Polynomial knot_factor;  // x * gcd(a, b)
  bool prime = false;
};

SkeletonReport skeleton(const BracketPair& p);

// Catalog lookup for a pair: exact entry match first, then a match of its
// skeleton, reporting the split-off knot factor (named when it is one of
// the K classes).
struct Classification {
  const CatalogEntry* entry = nullptr;     // exact pair match
  const CatalogEntry* skeleton_entry = nullptr;  // match after the gcd split
  Polynomial knot_factor;                  // meaningful when split off
  std::optional<KnotId> factor_class;      // knot_factor matched to K1..K6
  bool prime = false;

  bool recognized() const { return entry || skeleton_entry; }
};

Classification classify(const BracketPair& p);

std::string to_string(const Classification& c);

}  // namespace skein
