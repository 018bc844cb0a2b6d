#include "evenzeta/bernoulli.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace evenzeta {

BernoulliTable::BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("BernoulliTable: empty");
  }
}

const Rational& BernoulliTable::operator[](int index) const {
  if (!covers(index)) {
    throw std::out_of_range("BernoulliTable: index " + std::to_string(index) +
                            " beyond max_index " + std::to_string(max_index()));
  }
  return values_[static_cast<std::size_t>(index)];
}

// Akiyama-Tanigawa: produces B_1 = +1/2, flipped afterwards.
BernoulliTable bernoulli_table(int max_index) {
  if (max_index < 0) {
    throw std::invalid_argument("bernoulli_table: max_index must be nonnegative");
  }
  std::vector<Rational> row(static_cast<std::size_t>(max_index) + 1);
  std::vector<Rational> values;
  values.reserve(row.size());
  for (int m = 0; m <= max_index; ++m) {
    row[m] = Rational(BigInt(1), BigInt(m + 1));
    for (int j = m; j >= 1; --j) {
      row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
    }
    values.push_back(row[0]);
  }
  if (max_index >= 1) {
    values[1] = -values[1];
  }
  return BernoulliTable(std::move(values));
}

BernoulliPolyValue bernoulli_poly(int n, const Rational& x, const BernoulliTable& table) {
  if (n < 0) {
    throw std::invalid_argument("bernoulli_poly: order must be nonnegative");
  }
  if (!table.covers(n)) {
    throw std::out_of_range("bernoulli_poly: table does not cover order " + std::to_string(n));
  }
  // Horner in x over coefficients C(n,k) B_k, highest power first (k = 0).
  Rational acc;
  for (int k = 0; k <= n; ++k) {
    acc = acc * x + Rational(binomial(n, k)) * table[k];
  }
  return {n, x, acc};
}

BernoulliPolyValue bernoulli_poly(int n, const Rational& x) {
  return bernoulli_poly(n, x, bernoulli_table(n < 0 ? 0 : n));
}

VerificationReport verify_half_identity(int k_max) {
  if (k_max < 1) {
    throw std::invalid_argument("verify_half_identity: k_max must be >= 1");
  }
  const BernoulliTable table = bernoulli_table(2 * k_max);
  const Rational half(BigInt(1), BigInt(2));
  VerificationReport report("half_identity", 0.0);
  for (int k = 1; k <= k_max; ++k) {
    const Rational lhs = bernoulli_poly(2 * k, half, table).value;
    const Rational rhs = (pow2(1 - 2 * k) - Rational(1)) * table[2 * k];
    const Rational diff = (lhs - rhs).abs();
    double residual = diff.to_double();
    if (!diff.is_zero() && residual == 0.0) {
      residual = std::numeric_limits<double>::denorm_min();
    }
    report.add("k=" + std::to_string(k), residual);
  }
  return report;
}

}  // namespace evenzeta
