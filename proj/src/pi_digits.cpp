#include "evenzeta/pi_digits.hpp"

#include <stdexcept>

#include <gmpxx.h>

namespace evenzeta {
namespace {

constexpr int kGuardDigits = 10;

// unity * arctan(1/x), each term truncated toward zero.
mpz_class arctan_inverse(unsigned long x, const mpz_class& unity) {
  const unsigned long x2 = x * x;
  mpz_class power = unity / x;
  mpz_class sum = power;
  for (unsigned long k = 1; power != 0; ++k) {
    power /= x2;
    mpz_class term = power / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

DecimalString pi_digits(int precision) {
  if (precision < 1 || precision > kMaxPiDigits) {
    throw std::out_of_range("pi_digits: precision must be in [1, 10000]");
  }
  mpz_class unity;
  mpz_ui_pow_ui(unity.get_mpz_t(), 10, static_cast<unsigned long>(precision + kGuardDigits));

  // pi = 16 atan(1/5) - 4 atan(1/239)
  mpz_class pi = 16 * arctan_inverse(5, unity) - 4 * arctan_inverse(239, unity);

  mpz_class guard;
  mpz_ui_pow_ui(guard.get_mpz_t(), 10, kGuardDigits);
  pi /= guard;

  std::string s = pi.get_str();
  DecimalString out;
  out.precision = precision;
  out.digits = s.substr(0, 1) + "." + s.substr(1);
  return out;
}

}  // namespace evenzeta
