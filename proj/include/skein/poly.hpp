#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

struct not_divisible : std::domain_error {
  using std::domain_error::domain_error;
};

// Dense integer polynomial in one variable x. Coefficients are stored
// ascending by degree with no trailing zeros; the zero polynomial is the
// empty coefficient sequence, so degree() is empty rather than a numeric
// sentinel.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long long> ascending);
  explicit Polynomial(std::vector<BigInt> ascending);

  static Polynomial constant(BigInt c);
  // c * x^k
  static Polynomial monomial(BigInt c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const;
  // Coefficient of x^k; zero beyond the stored degree.
  const BigInt& coeff(std::size_t k) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval(const BigInt& x) const;
  BigInt lead() const;  // leading coefficient; zero for the zero polynomial

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

 private:
  void trim();
  std::vector<BigInt> c_;
};

// x itself, the bracket value of a single closed circle.
Polynomial poly_x();

Polynomial pow(const Polynomial& p, std::size_t n);

// Exact division by x: shifts every coefficient down one degree.
// Throws not_divisible when the constant term is nonzero.
Polynomial div_by_x_exact(const Polynomial& p);

// Exact division q | p; throws not_divisible when the remainder is nonzero
// or a coefficient quotient leaves the integers.
Polynomial div_exact(const Polynomial& p, const Polynomial& q);

// Greatest common divisor over the integer polynomials: gcd of contents
// times primitive gcd, normalized to a positive leading coefficient.
// gcd(0, 0) = 0 by convention.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

// Coefficients of x^0..x^(k_max) as a fixed-width row, zero padded.
std::vector<BigInt> coeff_row(const Polynomial& p, std::size_t k_max);

// "x^3+4x^2+3x" style. Descending degree by default; ascending reverses the
// term order ("3x+4x^2+x^3").
std::string to_string(const Polynomial& p, bool descending = true);

}  // namespace skein
