#include "skein/fraction.hpp"

namespace skein {

TangleFraction TangleFraction::infinity() {
  TangleFraction f;
  f.inf_ = true;
  return f;
}

TangleFraction TangleFraction::make(Polynomial num, Polynomial den) {
  if (den.is_zero()) {
    if (num.is_zero()) throw both_zero();
    return infinity();
  }
  TangleFraction f;
  if (num.is_zero()) {
    f.num_ = Polynomial{};
    f.den_ = Polynomial{1};
    return f;
  }
  Polynomial g = gcd(num, den);
  f.num_ = div_exact(num, g);
  f.den_ = div_exact(den, g);
  if (f.den_.lead() < 0) {
    f.num_ = -f.num_;
    f.den_ = -f.den_;
  }
  return f;
}

bool TangleFraction::operator==(const TangleFraction& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return num_ == o.num_ && den_ == o.den_;
}

TangleFraction add(const TangleFraction& f, const TangleFraction& g) {
  if (f.is_infinity() || g.is_infinity()) return TangleFraction::infinity();
  return TangleFraction::make(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
}

TangleFraction mul(const TangleFraction& f, const TangleFraction& g) {
  if (f.is_infinity() || g.is_infinity()) {
    const TangleFraction& other = f.is_infinity() ? g : f;
    if (!other.is_infinity() && other.num().is_zero())
      throw invalid_pair("indeterminate product: infinity times zero");
    return TangleFraction::infinity();
  }
  return TangleFraction::make(f.num() * g.num(), f.den() * g.den());
}

TangleFraction reciprocal(const TangleFraction& f) {
  if (f.is_infinity()) return from_poly(Polynomial{});
  return TangleFraction::make(f.den(), f.num());
}

TangleFraction pow(const TangleFraction& f, std::size_t n) {
  TangleFraction acc = from_poly(Polynomial{1});
  for (std::size_t i = 0; i < n; ++i) acc = mul(acc, f);
  return acc;
}

TangleFraction from_poly(const Polynomial& p) {
  return TangleFraction::make(p, Polynomial{1});
}

std::string to_string(const TangleFraction& f, bool descending) {
  if (f.is_infinity()) return "infinity";
  if (f.den() == Polynomial{1}) return to_string(f.num(), descending);
  return "(" + to_string(f.num(), descending) + ")/(" + to_string(f.den(), descending) + ")";
}

SkeletonReport skeleton(const BracketPair& p) {
  if (p.a.is_zero() && p.b.is_zero()) throw both_zero();
  Polynomial g = gcd(p.a, p.b);
  SkeletonReport r;
  r.skeleton = {div_exact(p.a, g), div_exact(p.b, g)};
  r.knot_factor = poly_x() * g;
  r.prime = g == Polynomial{1};
  return r;
}

Classification classify(const BracketPair& p) {
  const Catalog& cat = load_catalog();
  Classification c;
  for (const auto& e : cat.entries)
    if (e.pair == p) {
      c.entry = &e;
      break;
    }
  SkeletonReport s = skeleton(p);
  c.prime = s.prime;
  if (c.entry) return c;
  if (!s.prime) {
    for (const auto& e : cat.entries)
      if (e.pair == s.skeleton) {
        c.skeleton_entry = &e;
        break;
      }
    c.knot_factor = s.knot_factor;
    c.factor_class = knot_id_from_bracket(s.knot_factor);
  }
  return c;
}

std::string to_string(const Classification& c) {
  if (c.entry) {
    const CatalogEntry& e = *c.entry;
    if (e.skeleton_of && e.knot) {
      const Catalog& cat = load_catalog();
      return e.id + " = skeleton " + cat.entry(*e.skeleton_of).id + " # " +
             knot_class(*e.knot).name;
    }
    return e.id;
  }
  if (c.skeleton_entry) {
    std::string factor = c.factor_class ? std::string(knot_class(*c.factor_class).name)
                                        : to_string(c.knot_factor);
    return "unrecognized pair; skeleton " + c.skeleton_entry->id + " # " + factor;
  }
  return "unrecognized";
}

}  // namespace skein
