#pragma once

#include <map>
#include <ostream>
#include <string>

#include "kirby4/integer.hpp"

namespace kirby4 {

// Laurent polynomial in t with arbitrary-precision integer coefficients.
// Zero coefficients are never stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long constant) : IntPolynomial(Integer(constant), 0) {}  // NOLINT: implicit by design
  IntPolynomial(const Integer& coefficient, long exponent);

  static IntPolynomial t() { return IntPolynomial(Integer(1), 1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<long, Integer>& terms() const noexcept { return terms_; }
  Integer coefficient(long exponent) const;
  long min_exponent() const;  // requires !is_zero()
  long max_exponent() const;  // requires !is_zero()

  Integer evaluate(const Integer& t) const;  // t must be +-1 if negative exponents occur

  // Multiplies by +-t^k so the lowest exponent is 0 and the constant term is
  // positive; Alexander polynomials compare equal after this.
  IntPolynomial normalized() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.terms_ == b.terms_; }

  // Exact quotient; throws InternalInvariantViolation if b does not divide a.
  friend IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

  std::string to_string() const;

 private:
  void add_term(long exponent, const Integer& c);
  std::map<long, Integer> terms_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace kirby4
