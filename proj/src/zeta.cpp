#include "evenzeta/zeta.hpp"

#include <stdexcept>
#include <string>

namespace evenzeta {
namespace {

Rational sign_power(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational inverse(const BigInt& v) { return Rational(BigInt(1), v); }

void require_priors(int l, std::span<const ZetaCoefficient> priors, const char* who) {
  if (l < 1) {
    throw std::invalid_argument(std::string(who) + ": l must be >= 1");
  }
  if (priors.size() < static_cast<std::size_t>(l - 1)) {
    throw std::invalid_argument(std::string(who) + ": missing prior coefficient for l=" +
                                std::to_string(priors.size() + 1));
  }
  for (int j = 1; j < l; ++j) {
    if (priors[j - 1].l != j) {
      throw std::invalid_argument(std::string(who) + ": prior " + std::to_string(j) +
                                  " has l=" + std::to_string(priors[j - 1].l));
    }
  }
}

// coeff * pi^power. Sums are only defined between equal powers, which keeps
// the recurrences honest about every power of pi they introduce.
struct PiTerm {
  Rational coeff;
  int power = 0;

  PiTerm& operator+=(const PiTerm& rhs) {
    if (coeff.is_zero()) {
      power = rhs.power;
    } else if (!rhs.coeff.is_zero() && rhs.power != power) {
      throw std::logic_error("PiTerm: adding pi^" + std::to_string(rhs.power) + " to pi^" +
                             std::to_string(power));
    }
    coeff += rhs.coeff;
    return *this;
  }
  friend PiTerm operator*(const PiTerm& a, const PiTerm& b) {
    return {a.coeff * b.coeff, a.power + b.power};
  }
};

PiTerm zeta_term(const ZetaCoefficient& z) { return {z.q, 2 * z.l}; }

// sum_{j=1}^{n-1} (-1)^j C(top, 2j-1) (2j-1)! (2^(2j-1)-1) / (2 pi)^(2j-1) * zeta(2j)
PiTerm srivastava_inner_sum(int n, long top, std::span<const ZetaCoefficient> priors) {
  PiTerm sum{Rational(0), 1};
  for (int j = 1; j < n; ++j) {
    const int odd = 2 * j - 1;
    const Rational scale = sign_power(j) * Rational(binomial(top, odd)) *
                           Rational(factorial(static_cast<unsigned long>(odd))) *
                           (pow2(odd) - Rational(1)) * pow2(-odd);
    sum += PiTerm{scale, -odd} * zeta_term(priors[j - 1]);
  }
  return sum;
}

ZetaCoefficient finish(int l, const PiTerm& value) {
  if (value.power != 2 * l) {
    throw std::logic_error("zeta recurrence produced pi^" + std::to_string(value.power) +
                           " for zeta(" + std::to_string(2 * l) + ")");
  }
  return {l, value.coeff};
}

}  // namespace

ZetaCoefficient zeta_even_euler(int l, const BernoulliTable& table) {
  if (l < 1) {
    throw std::invalid_argument("zeta_even_euler: l must be >= 1");
  }
  if (!table.covers(2 * l)) {
    throw std::out_of_range("zeta_even_euler: Bernoulli table too small for l=" +
                            std::to_string(l));
  }
  const Rational q = pow2(2 * l - 1) * sign_power(l - 1) * table[2 * l] *
                     inverse(factorial(static_cast<unsigned long>(2 * l)));
  return {l, q};
}

ZetaCoefficient zeta_even_theorem(int l, std::span<const ZetaCoefficient> priors) {
  require_priors(l, priors, "zeta_even_theorem");
  const Rational bracket =
      sign_power(l + 1) * Rational(BigInt(1), BigInt(4 * l)) + sign_power(l) * Rational(BigInt(1), BigInt(2));
  Rational braces = bracket * inverse(factorial(static_cast<unsigned long>(2 * l - 1)));
  for (int j = 1; j < l; ++j) {
    braces += sign_power(l - j) * inverse(factorial(static_cast<unsigned long>(2 * (l - j)))) *
              priors[j - 1].q;
  }
  const Rational prefactor = pow2(2 * l - 1) / (Rational(1) - pow2(2 * l));
  return {l, prefactor * braces};
}

ZetaCoefficient zeta_even_srivastava_a(int n, std::span<const ZetaCoefficient> priors) {
  require_priors(n, priors, "zeta_even_srivastava_a");
  // (-1)^(n-1) (2 pi)^(2n-1) / ((2n)! (2^(2n-1) - 1))
  const PiTerm prefactor{sign_power(n - 1) * pow2(2 * n - 1) /
                             (Rational(factorial(static_cast<unsigned long>(2 * n))) *
                              (pow2(2 * n - 1) - Rational(1))),
                         2 * n - 1};
  PiTerm bracket{Rational(BigInt(1), BigInt(2 * (2 * n + 1))), 1};
  bracket += srivastava_inner_sum(n, 2 * n, priors);
  return finish(n, prefactor * bracket);
}

ZetaCoefficient zeta_even_srivastava_b(int n, std::span<const ZetaCoefficient> priors) {
  require_priors(n, priors, "zeta_even_srivastava_b");
  // (-1)^(n-1) (2 pi)^(2n-1) / ((2n-1)! (2^(2n) - 1))
  const PiTerm prefactor{sign_power(n - 1) * pow2(2 * n - 1) /
                             (Rational(factorial(static_cast<unsigned long>(2 * n - 1))) *
                              (pow2(2 * n) - Rational(1))),
                         2 * n - 1};
  PiTerm bracket{Rational(BigInt(1), BigInt(4 * n)), 1};
  bracket += srivastava_inner_sum(n, 2 * n - 1, priors);
  return finish(n, prefactor * bracket);
}

std::string_view route_name(ZetaRoute route) {
  switch (route) {
    case ZetaRoute::Theorem:
      return "theorem";
    case ZetaRoute::Euler:
      return "euler";
    case ZetaRoute::SrivastavaA:
      return "srivastava_a";
    case ZetaRoute::SrivastavaB:
      return "srivastava_b";
  }
  return "unknown";
}

std::vector<ZetaCoefficient> zeta_table(int max_l, ZetaRoute route) {
  if (max_l < 1) {
    throw std::invalid_argument("zeta_table: max_l must be >= 1");
  }
  std::vector<ZetaCoefficient> out;
  out.reserve(static_cast<std::size_t>(max_l));
  if (route == ZetaRoute::Euler) {
    const BernoulliTable table = bernoulli_table(2 * max_l);
    for (int l = 1; l <= max_l; ++l) {
      out.push_back(zeta_even_euler(l, table));
    }
    return out;
  }
  for (int l = 1; l <= max_l; ++l) {
    switch (route) {
      case ZetaRoute::Theorem:
        out.push_back(zeta_even_theorem(l, out));
        break;
      case ZetaRoute::SrivastavaA:
        out.push_back(zeta_even_srivastava_a(l, out));
        break;
      case ZetaRoute::SrivastavaB:
        out.push_back(zeta_even_srivastava_b(l, out));
        break;
      case ZetaRoute::Euler:
        break;
    }
  }
  return out;
}

DecimalString render_zeta(const ZetaCoefficient& coeff, int precision) {
  if (precision < 1 || precision > 1000) {
    throw std::out_of_range("render_zeta: precision must be in [1, 1000]");
  }
  if (coeff.l < 1) {
    throw std::invalid_argument("render_zeta: l must be >= 1");
  }
  // Truncating pi to d digits perturbs q*pi^(2l) by about 2l * 10^-d, so the
  // guard grows with the digit count of 2l.
  const unsigned long power = 2 * static_cast<unsigned long>(coeff.l);
  const int guard = 10 + static_cast<int>(std::to_string(power).size());
  const int digits = precision + guard;

  std::string pi_text = pi_digits(digits).str();
  pi_text.erase(1, 1);  // drop the decimal point: pi * 10^digits
  const BigInt pi_scaled(pi_text);

  BigInt pi_pow;
  mpz_pow_ui(pi_pow.get_mpz_t(), pi_scaled.get_mpz_t(), power);
  BigInt out_scale;
  mpz_ui_pow_ui(out_scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
  BigInt in_scale;
  mpz_ui_pow_ui(in_scale.get_mpz_t(), 10, static_cast<unsigned long>(digits) * power);

  const Rational q = coeff.q.abs();
  BigInt scaled = q.num() * pi_pow * out_scale;
  BigInt divisor = q.den() * in_scale;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), divisor.get_mpz_t());

  std::string text = scaled.get_str();
  if (text.size() <= static_cast<std::size_t>(precision)) {
    text.insert(0, static_cast<std::size_t>(precision) + 1 - text.size(), '0');
  }
  text.insert(text.size() - static_cast<std::size_t>(precision), ".");
  if (coeff.q.sign() < 0) {
    text.insert(0, "-");
  }
  return {text, precision};
}

}  // namespace evenzeta
