#include "evenzeta/rational.hpp"

#include <stdexcept>

namespace evenzeta {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational rat_make(const BigInt& num, const BigInt& den) { return Rational(num, den); }

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be nonnegative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational pow2(long e) {
  BigInt p;
  const unsigned long mag = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, mag);
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational pow(const Rational& base, unsigned long e) {
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rational(n, d);
}

}  // namespace evenzeta
