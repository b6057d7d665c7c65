#include "kirby4/polynomial.hpp"

#include <sstream>

#include "kirby4/error.hpp"

namespace kirby4 {

IntPolynomial::IntPolynomial(const Integer& coefficient, long exponent) {
  if (coefficient != 0) terms_.emplace(exponent, coefficient);
}

void IntPolynomial::add_term(long exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer IntPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

long IntPolynomial::min_exponent() const { return terms_.begin()->first; }
long IntPolynomial::max_exponent() const { return terms_.rbegin()->first; }

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && t != 1 && t != -1) {
      throw Error(ErrorCode::InternalInvariantViolation, "cannot evaluate negative powers at this point");
    }
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    sum += c * power;
  }
  return sum;
}

IntPolynomial IntPolynomial::normalized() const {
  if (is_zero()) return {};
  IntPolynomial out;
  const long shift = min_exponent();
  const bool flip = terms_.begin()->second < 0;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e - shift, flip ? Integer(-c) : c);
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InternalInvariantViolation, "polynomial division by zero");
  IntPolynomial rem = a;
  IntPolynomial quotient;
  const long b_top = b.max_exponent();
  const long b_bottom = b.min_exponent();
  const Integer& lead = b.terms_.rbegin()->second;
  if (rem.is_zero()) return quotient;
  // Any exact quotient has its lowest term at this exponent.
  const long lowest = rem.min_exponent() - b_bottom;
  while (!rem.is_zero()) {
    const long e = rem.max_exponent() - b_top;
    if (e < lowest || rem.max_exponent() - rem.min_exponent() < b_top - b_bottom) {
      throw Error(ErrorCode::InternalInvariantViolation, "polynomial division is not exact");
    }
    const Integer& top = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorCode::InternalInvariantViolation, "polynomial division is not exact");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    const IntPolynomial term(q, e);
    quotient += term;
    rem -= term * b;
  }
  return quotient;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

}  // namespace kirby4
