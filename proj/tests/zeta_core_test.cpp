#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/zeta.hpp"

using namespace evenzeta;

namespace {

// sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m. Gives B_1 = -1/2.
std::vector<Rational> bernoulli_by_recurrence(int max_index) {
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= max_index; ++m) {
    Rational acc;
    for (int j = 0; j < m; ++j) {
      acc += Rational(binomial(m + 1, j)) * b[j];
    }
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

Rational r(long n, long d) { return rat_make(n, d); }

}  // namespace

TEST_CASE("bernoulli_table examples") {
  const BernoulliTable t0 = bernoulli_table(0);
  CHECK(t0.max_index() == 0);
  CHECK(t0[0] == Rational(1));

  const BernoulliTable t12 = bernoulli_table(12);
  CHECK(t12[1] == r(-1, 2));
  CHECK(t12[2] == r(1, 6));
  CHECK(t12[12] == r(-691, 2730));
  CHECK_THROWS_AS(t12[13], std::out_of_range);
  CHECK_THROWS_AS(bernoulli_table(-1), std::invalid_argument);
}

TEST_CASE("bernoulli_table matches the binomial recurrence oracle") {
  const auto oracle = bernoulli_by_recurrence(100);
  const BernoulliTable table = bernoulli_table(100);
  CHECK(oracle[2] == r(1, 6));
  CHECK(oracle[12] == r(-691, 2730));
  for (int i = 0; i <= 100; ++i) {
    CHECK(table[i] == oracle[i]);
  }
}

TEST_CASE("Bernoulli parity and sign pattern") {
  const BernoulliTable table = bernoulli_table(101);
  for (int k = 1; k <= 50; ++k) {
    CHECK(table[2 * k + 1].is_zero());
    CHECK(table[2 * k].sign() == (k % 2 == 1 ? 1 : -1));
  }
}

TEST_CASE("bernoulli_poly examples") {
  CHECK(bernoulli_poly(2, Rational(0)).value == r(1, 6));
  CHECK(bernoulli_poly(2, r(1, 2)).value == r(-1, 12));
  CHECK(bernoulli_poly(4, r(1, 2)).value == r(7, 240));
  // B_4(x) = x^4 - 2x^3 + x^2 - 1/30
  const Rational x = r(2, 3);
  const Rational expanded = pow(x, 4) - Rational(2) * pow(x, 3) + pow(x, 2) - r(1, 30);
  CHECK(bernoulli_poly(4, x).value == expanded);
  CHECK(bernoulli_poly(0, r(5, 7)).value == Rational(1));
  CHECK_THROWS_AS(bernoulli_poly(-1, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli_poly(5, Rational(0), bernoulli_table(4)), std::out_of_range);
}

TEST_CASE("B_n(0) equals B_n") {
  const BernoulliTable table = bernoulli_table(60);
  for (int n = 0; n <= 60; ++n) {
    const BernoulliPolyValue v = bernoulli_poly(n, Rational(0), table);
    CHECK(v.n == n);
    CHECK(v.value == table[n]);
  }
}

TEST_CASE("half identity") {
  // k = 1: (1/2 - 1)(1/6), k = 2: (1/8 - 1)(-1/30)
  CHECK((r(1, 2) - Rational(1)) * r(1, 6) == r(-1, 12));
  CHECK((r(1, 8) - Rational(1)) * r(-1, 30) == r(7, 240));

  const VerificationReport small = verify_half_identity(2);
  REQUIRE(small.cases().size() == 2);
  CHECK(small.pass());

  const VerificationReport report = verify_half_identity(50);
  CHECK(report.cases().size() == 50);
  CHECK(report.max_residual() == 0.0);
  CHECK(report.tolerance() == 0.0);
  CHECK(report.pass());
  CHECK_THROWS_AS(verify_half_identity(0), std::invalid_argument);
}

TEST_CASE("zeta_even_euler") {
  const BernoulliTable table = bernoulli_table(6);
  CHECK(zeta_even_euler(1, table).q == r(1, 6));
  CHECK(zeta_even_euler(2, table).q == r(1, 90));
  // 2^5 * B_6 / 6! with B_6 = 1/42 from the recurrence oracle
  const Rational b6 = bernoulli_by_recurrence(6)[6];
  CHECK(b6 == r(1, 42));
  CHECK(zeta_even_euler(3, table).q == Rational(32) * b6 / Rational(720));
  CHECK(zeta_even_euler(3, table).q == r(1, 945));
  CHECK_THROWS_AS(zeta_even_euler(4, table), std::out_of_range);
}

TEST_CASE("zeta_even_theorem headline values") {
  std::vector<ZetaCoefficient> priors;
  const ZetaCoefficient z1 = zeta_even_theorem(1, priors);
  CHECK(z1.l == 1);
  CHECK(z1.q == r(1, 6));
  // prefactor -2/3, bracket 1/4 - 1/2
  CHECK(r(-2, 3) * (r(1, 4) - r(1, 2)) == r(1, 6));
  priors.push_back(z1);
  const ZetaCoefficient z2 = zeta_even_theorem(2, priors);
  CHECK(z2.q == r(1, 90));
  priors.push_back(z2);
  CHECK(zeta_even_theorem(3, priors).q == zeta_even_euler(3, bernoulli_table(6)).q);
}

TEST_CASE("recurrence routes reject missing or misordered priors") {
  std::vector<ZetaCoefficient> none;
  CHECK_THROWS_AS(zeta_even_theorem(2, none), std::invalid_argument);
  CHECK_THROWS_AS(zeta_even_srivastava_a(3, none), std::invalid_argument);
  CHECK_THROWS_AS(zeta_even_srivastava_b(2, none), std::invalid_argument);
  std::vector<ZetaCoefficient> wrong{{2, r(1, 90)}};
  CHECK_THROWS_AS(zeta_even_theorem(2, wrong), std::invalid_argument);
  CHECK_THROWS_AS(zeta_even_theorem(0, none), std::invalid_argument);
}

TEST_CASE("Srivastava recurrences") {
  std::vector<ZetaCoefficient> none;
  CHECK(zeta_even_srivastava_a(1, none).q == r(1, 6));
  CHECK(zeta_even_srivastava_b(1, none).q == r(1, 6));

  // n = 2, route A: prefactor -pi^3/21, bracket pi/10 - pi/3
  CHECK(r(-1, 21) * (r(1, 10) - r(1, 3)) == r(1, 90));
  const std::vector<ZetaCoefficient> one{{1, r(1, 6)}};
  CHECK(zeta_even_srivastava_a(2, one).q == r(1, 90));
  CHECK(zeta_even_srivastava_b(2, one).q == r(1, 90));

  const BernoulliTable table = bernoulli_table(20);
  const auto a = zeta_table(5, ZetaRoute::SrivastavaA);
  CHECK(a[4].q == zeta_even_euler(5, table).q);
  CHECK(a[4].q == r(1, 93555));
  const auto b = zeta_table(10, ZetaRoute::SrivastavaB);
  CHECK(b[9].q == zeta_even_euler(10, table).q);
}

TEST_CASE("four routes agree exactly for l = 1..50") {
  const auto theorem = zeta_table(50, ZetaRoute::Theorem);
  const auto euler = zeta_table(50, ZetaRoute::Euler);
  const auto a = zeta_table(50, ZetaRoute::SrivastavaA);
  const auto b = zeta_table(50, ZetaRoute::SrivastavaB);
  for (int i = 0; i < 50; ++i) {
    CHECK(theorem[i].l == i + 1);
    CHECK(theorem[i] == euler[i]);
    CHECK(theorem[i] == a[i]);
    CHECK(theorem[i] == b[i]);
  }
}

TEST_CASE("coefficients are positive and strictly decreasing") {
  const auto q = zeta_table(50, ZetaRoute::Theorem);
  for (int i = 0; i < 50; ++i) {
    CHECK(q[i].q.sign() > 0);
    if (i > 0) {
      CHECK(q[i].q < q[i - 1].q);
    }
  }
}

TEST_CASE("render_zeta") {
  const ZetaCoefficient z1{1, r(1, 6)};
  const ZetaCoefficient z2{2, r(1, 90)};
  CHECK(render_zeta(z1, 6).str() == "1.644934");
  CHECK(render_zeta(z2, 6).str() == "1.082323");
  CHECK(render_zeta(z1, 1).str() == "1.6");
  CHECK(render_zeta(z1, 6).precision == 6);
  CHECK(std::fabs(std::stod(render_zeta(z1, 20).str()) - std::numbers::pi * std::numbers::pi / 6) < 1e-15);
  CHECK(std::fabs(std::stod(render_zeta(z2, 20).str()) - std::pow(std::numbers::pi, 4) / 90) < 1e-15);
  CHECK_THROWS_AS(render_zeta(z1, 0), std::out_of_range);
  CHECK_THROWS_AS(render_zeta(z1, 1001), std::out_of_range);
}

TEST_CASE("render_zeta is a prefix family and tends to 1") {
  const auto q = zeta_table(30, ZetaRoute::Euler);
  for (const auto& z : q) {
    const std::string shorter = render_zeta(z, 40).str();
    const std::string longer = render_zeta(z, 200).str();
    CHECK(longer.compare(0, shorter.size(), shorter) == 0);
  }
  // zeta(60) = 1 + 2^-60 + ...
  CHECK(render_zeta(q[29], 20).str() == "1.00000000000000000086");
}
