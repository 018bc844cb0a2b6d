#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace evenzeta {

using BigInt = mpz_class;

/// Exact rational number kept in canonical form: positive denominator,
/// gcd(|num|, den) == 1, and zero stored as 0/1.
///
/// Every arithmetic operator returns a canonical value, so two Rationals
/// compare equal exactly when their numerators and denominators match.
/// Division by zero and zero denominators throw std::domain_error.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return value_.get_d(); }

  /// "num/den", always with an explicit denominator (e.g. "0/1", "5/1").
  std::string str() const;

  Rational operator-() const;
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Canonical num/den. Throws std::domain_error when den == 0.
Rational rat_make(const BigInt& num, const BigInt& den);

/// n!
BigInt factorial(unsigned long n);

/// C(n, k); zero when k < 0 or k > n. Throws std::invalid_argument for n < 0.
BigInt binomial(long n, long k);

/// 2^e for any integer exponent, as an exact Rational.
Rational pow2(long e);

/// base^e for e >= 0 (0^0 == 1).
Rational pow(const Rational& base, unsigned long e);

}  // namespace evenzeta
