#include "skein/closures.hpp"

namespace skein {

const char* closure_name(ClosureKind k) {
  switch (k) {
    case ClosureKind::N: return "N";
    case ClosureKind::D: return "D";
    case ClosureKind::R: return "R";
  }
  return "?";
}

std::optional<ClosureKind> closure_from_name(const std::string& name) {
  if (name == "N") return ClosureKind::N;
  if (name == "D") return ClosureKind::D;
  if (name == "R") return ClosureKind::R;
  return std::nullopt;
}

Polynomial close(const BracketPair& p, ClosureKind kind) {
  const Polynomial x = poly_x();
  const Polynomial x2 = x * x;
  switch (kind) {
    case ClosureKind::N: return x2 * p.a + x * p.b;
    case ClosureKind::D: return x * p.a + x2 * p.b;
    case ClosureKind::R: return (x2 + x) * (p.a + p.b);
  }
  throw std::logic_error("unhandled closure kind");
}

BracketPair repeat_pair(const BracketPair& p, std::size_t n) {
  Polynomial an = pow(p.a, n);
  Polynomial sn = pow(p.a + poly_x() * p.b, n);
  // (a + x b)^n and a^n share the constant term a(0)^n, so the difference
  // is divisible by x exactly.
  return {an, div_by_x_exact(sn - an)};
}

Polynomial repeat_closure(const BracketPair& p, std::size_t n, ClosureKind kind) {
  Polynomial sn = pow(p.a + poly_x() * p.b, n);
  const Polynomial x2m1{-1, 0, 1};
  switch (kind) {
    case ClosureKind::D: return poly_x() * sn;
    case ClosureKind::N: return sn + x2m1 * pow(p.a, n);
    case ClosureKind::R: return Polynomial{1, 1} * sn + x2m1 * pow(p.a, n);
  }
  throw std::logic_error("unhandled closure kind");
}

}  // namespace skein
