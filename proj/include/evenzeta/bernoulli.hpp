#pragma once

#include <vector>

#include "evenzeta/rational.hpp"
#include "evenzeta/report.hpp"

namespace evenzeta {

/// Exact Bernoulli numbers B_0..B_max_index with the B_1 = -1/2 convention,
/// so that B_n(0) == B_n for every n.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<Rational> values);

  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  bool covers(int index) const { return index >= 0 && index <= max_index(); }
  /// Throws std::out_of_range past max_index().
  const Rational& operator[](int index) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

BernoulliTable bernoulli_table(int max_index);

struct BernoulliPolyValue {
  int n = 0;
  Rational x;
  Rational value;
};

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
BernoulliPolyValue bernoulli_poly(int n, const Rational& x, const BernoulliTable& table);
BernoulliPolyValue bernoulli_poly(int n, const Rational& x);

/// Checks B_{2k}(1/2) == (2^(1-2k) - 1) B_{2k} exactly for k = 1..k_max.
/// Tolerance is zero; any nonzero difference fails.
VerificationReport verify_half_identity(int k_max);

}  // namespace evenzeta
