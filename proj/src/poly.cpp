#include "skein/poly.hpp"

#include <algorithm>
#include <sstream>

namespace skein {

Polynomial::Polynomial(std::initializer_list<long long> ascending) {
  c_.assign(ascending.begin(), ascending.end());
  trim();
}

Polynomial::Polynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::constant(BigInt c) {
  Polynomial p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

Polynomial Polynomial::monomial(BigInt c, std::size_t k) {
  Polynomial p;
  if (c != 0) {
    p.c_.assign(k + 1, BigInt(0));
    p.c_[k] = std::move(c);
  }
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

const BigInt& Polynomial::coeff(std::size_t k) const {
  static const BigInt zero(0);
  return k < c_.size() ? c_[k] : zero;
}

BigInt Polynomial::eval(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt Polynomial::lead() const {
  return c_.empty() ? BigInt(0) : c_.back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial poly_x() { return Polynomial{0, 1}; }

Polynomial pow(const Polynomial& p, std::size_t n) {
  // x^0 = 1 for every p, the zero polynomial included.
  Polynomial acc = Polynomial::constant(1);
  Polynomial base = p;
  while (n > 0) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return acc;
}

Polynomial div_by_x_exact(const Polynomial& p) {
  if (p.is_zero()) return {};
  if (p.coeff(0) != 0) throw not_divisible("constant term " + p.coeff(0).str() + " is not divisible by x");
  std::vector<BigInt> r(p.coeffs().begin() + 1, p.coeffs().end());
  return Polynomial(std::move(r));
}

Polynomial div_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw not_divisible("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.coeffs().size() < q.coeffs().size()) throw not_divisible("degree of divisor exceeds dividend");
  std::vector<BigInt> rem = p.coeffs();
  std::vector<BigInt> quo(p.coeffs().size() - q.coeffs().size() + 1, BigInt(0));
  const auto& d = q.coeffs();
  for (std::size_t i = quo.size(); i-- > 0;) {
    BigInt top = rem[i + d.size() - 1];
    if (top == 0) continue;
    if (top % d.back() != 0) throw not_divisible("leading coefficient does not divide");
    BigInt f = top / d.back();
    quo[i] = f;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * d[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw not_divisible("nonzero remainder");
  return Polynomial(std::move(quo));
}

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  using boost::multiprecision::gcd;
  return gcd(a, b);
}

BigInt content(const Polynomial& p) {
  BigInt g(0);
  for (const auto& c : p.coeffs()) g = big_gcd(g, c);
  return g;  // zero only for the zero polynomial
}

Polynomial scale_down(const Polynomial& p, const BigInt& k) {
  std::vector<BigInt> r = p.coeffs();
  for (auto& c : r) c /= k;
  return Polynomial(std::move(r));
}

// Pseudo-remainder of a by b (both nonzero, deg a >= deg b): multiply a by
// lead(b)^(deg a - deg b + 1) so the division stays integral.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b) {
  const auto& d = b.coeffs();
  while (!a.is_zero() && a.coeffs().size() >= d.size()) {
    std::vector<BigInt> r = a.coeffs();
    BigInt f = r.back();
    std::size_t shift = r.size() - d.size();
    for (auto& c : r) c *= d.back();
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= f * d[j];
    a = Polynomial(std::move(r));
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) return {};
  if (p.is_zero() || q.is_zero()) {
    const Polynomial& n = p.is_zero() ? q : p;
    return n.lead() < 0 ? -n : n;
  }
  BigInt cg = big_gcd(content(p), content(q));
  Polynomial a = scale_down(p, content(p));
  Polynomial b = scale_down(q, content(q));
  // Euclid on primitive parts, re-primitivizing each pseudo-remainder.
  while (!b.is_zero()) {
    if (a.coeffs().size() < b.coeffs().size()) std::swap(a, b);
    Polynomial r = pseudo_rem(a, b);
    if (!r.is_zero()) r = scale_down(r, content(r));
    a = std::move(b);
    b = std::move(r);
  }
  Polynomial g = Polynomial::constant(cg) * a;
  if (g.lead() < 0) g = -g;
  return g;
}

std::vector<BigInt> coeff_row(const Polynomial& p, std::size_t k_max) {
  std::vector<BigInt> row(k_max + 1, BigInt(0));
  for (std::size_t k = 0; k <= k_max; ++k) row[k] = p.coeff(k);
  return row;
}

std::string to_string(const Polynomial& p, bool descending) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](std::size_t k) {
    const BigInt& c = p.coeff(k);
    if (c == 0) return;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    BigInt m = c < 0 ? BigInt(-c) : c;
    if (m != 1 || k == 0) out << m.str();
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  };
  std::size_t deg = *p.degree();
  if (descending)
    for (std::size_t k = deg + 1; k-- > 0;) emit(k);
  else
    for (std::size_t k = 0; k <= deg; ++k) emit(k);
  return out.str();
}

}  // namespace skein
