#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/pi_digits.hpp"
#include "evenzeta/rational.hpp"

namespace evenzeta {

/// zeta(2l) = q * pi^(2l).
struct ZetaCoefficient {
  int l = 0;
  Rational q;
  friend bool operator==(const ZetaCoefficient&, const ZetaCoefficient&) = default;
};

/// Euler's closed form q = 2^(2l-1) (-1)^(l-1) B_{2l} / (2l)!.
/// Throws std::out_of_range when the table does not reach index 2l.
ZetaCoefficient zeta_even_euler(int l, const BernoulliTable& table);

// The recurrence routes take the previously computed coefficients for
// j = 1..l-1 (in order) and throw std::invalid_argument when any is missing.

/// The WZ-derived recurrence:
///   q_l = 2^(2l-1)/(1-2^(2l)) * { [(-1)^(l+1)/(4l) + (-1)^l/2] / (2l-1)!
///                                 + sum_j (-1)^(l-j) q_j / (2(l-j))! }
ZetaCoefficient zeta_even_theorem(int l, std::span<const ZetaCoefficient> priors);

/// Recurrence with (2n)!(2^(2n-1)-1) in the prefactor and pi/(2(2n+1)) as the
/// bracket's leading term.
ZetaCoefficient zeta_even_srivastava_a(int n, std::span<const ZetaCoefficient> priors);

/// Recurrence with (2n-1)!(2^(2n)-1) in the prefactor and pi/(4n) as the
/// bracket's leading term.
ZetaCoefficient zeta_even_srivastava_b(int n, std::span<const ZetaCoefficient> priors);

enum class ZetaRoute { Theorem, Euler, SrivastavaA, SrivastavaB };

std::string_view route_name(ZetaRoute route);

/// q_1..q_max_l by one route; recurrence routes feed on their own output.
std::vector<ZetaCoefficient> zeta_table(int max_l, ZetaRoute route);

/// Decimal expansion of q * pi^(2l), truncated to `precision` digits.
/// Throws std::out_of_range unless 1 <= precision <= 1000.
DecimalString render_zeta(const ZetaCoefficient& coeff, int precision);

}  // namespace evenzeta
