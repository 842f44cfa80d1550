#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jacobi/errors.hpp"
#include "jacobi/pq_series.hpp"

using namespace jacobi;

namespace {

constexpr GridExp G = QExp::kGrid;

// Triple-product sums: sum_n s(n) q^(x^2 / 2) p^x over x = n + shift.
PQSeries theta_sum(bool half, bool alternating, GridExp t) {
  std::map<long, QExp> cols;
  for (long n = -40; n <= 40; ++n) {
    const Rational x = half ? Rational(2 * n + 1, 2) : Rational(n);
    const Rational e = x * x / Rational(2) * Rational(G);
    const long q = e.to_long();
    if (q >= t) continue;
    const Rational c = alternating && n % 2 != 0 ? Rational(-1) : Rational(1);
    const long p = (x * Rational(2)).to_long();
    cols.emplace(p, QExp::monomial(c, q, t));
  }
  return PQSeries::from_columns(cols, t);
}

PQSeries random_pq(std::mt19937& rng, GridExp t) {
  std::uniform_int_distribution<long> coef(-5, 5);
  PQSeries s = PQSeries::zero(t);
  for (long n = 0; n * G < t; ++n)
    for (long r = -2 - n; r <= 2 + n; ++r) s += PQSeries::monomial(Rational(coef(rng)), 2 * r, n * G);
  return s.truncated(t);
}

}  // namespace

TEST_CASE("theta functions against triple-product sums") {
  const GridExp t = 12 * G;
  CHECK_FALSE(first_difference(theta(ThetaIndex(1), t), theta_sum(true, true, t)));
  CHECK_FALSE(first_difference(theta(ThetaIndex(2), t), theta_sum(true, false, t)));
  CHECK_FALSE(first_difference(theta(ThetaIndex(3), t), theta_sum(false, false, t)));
  CHECK_FALSE(first_difference(theta(ThetaIndex(4), t), theta_sum(false, true, t)));
  CHECK_THROWS_AS(ThetaIndex(5), DomainError);
}

TEST_CASE("theta_1 leading terms and symmetry") {
  const PQSeries th = theta(ThetaIndex(1), 2 * G);
  CHECK(th.coeff(3, 1) == Rational(1));
  CHECK(th.coeff(3, -1) == Rational(-1));
  CHECK(th.coeff(27, 3) == Rational(-1));
  CHECK(th.coeff(27, -3) == Rational(1));
  CHECK(th.coeff(27, 1) == Rational(0));
  CHECK(reflect_p(th) == -th);
}

TEST_CASE("theta_1 derivative at zero is eta^3") {
  const GridExp t = 15 * G;
  const QExp g = theta_z_derivative_at_zero(t);
  CHECK(g.valuation() == 3);
  CHECK(equal_within_truncation(g.pow(8), delta(t)));
}

TEST_CASE("weak generators match the classical expansions") {
  const GridExp t = 3 * G;
  const PQSeries m2 = phi_weak(WeakKind::minus2, t);
  const PQSeries z0 = phi_weak(WeakKind::zero, t);
  const long expect_m2[2][5] = {{0, 1, -2, 1, 0}, {-2, 8, -12, 8, -2}};
  const long expect_z0[2][5] = {{0, 1, 10, 1, 0}, {10, -64, 108, -64, 10}};
  for (long n = 0; n < 2; ++n)
    for (long r = -2; r <= 2; ++r) {
      CHECK(m2.coeff(n * G, 2 * r) == Rational(expect_m2[n][r + 2]));
      CHECK(z0.coeff(n * G, 2 * r) == Rational(expect_z0[n][r + 2]));
    }
  const long row2[7] = {1, 108, -513, 808, -513, 108, 1};
  for (long r = -3; r <= 3; ++r) CHECK(z0.coeff(2 * G, 2 * r) == Rational(row2[r + 3]));
  CHECK(restrict_z0(m2).is_zero());
  CHECK(restrict_z0(z0) == QExp::constant(Rational(12), t));
}

TEST_CASE("support bounds") {
  CHECK(support_radius(0, 1, SupportMode::holomorphic) == 0);
  CHECK(support_radius(0, 1, SupportMode::weak) == 1);
  CHECK(support_radius(4, 1, SupportMode::holomorphic) == 4);
  CHECK(support_radius(2, 3, SupportMode::weak) == 5);
  const PQSeries z0 = phi_weak(WeakKind::zero, 4 * G);
  CHECK(singular_coefficient_check(z0, 1, SupportMode::weak).empty());
  const auto bad = singular_coefficient_check(z0, 1, SupportMode::holomorphic);
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front() == FourierPoint{Rational(0), Rational(-1)});
}

TEST_CASE("ring axioms on random expansions") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const PQSeries a = random_pq(rng, 4 * G), b = random_pq(rng, 3 * G), c = random_pq(rng, 5 * G);
    CHECK_FALSE(first_difference((a * b) * c, a * (b * c)));
    CHECK_FALSE(first_difference(a * (b + c), a * b + a * c));
    CHECK(a * b == b * a);
    CHECK_FALSE(first_difference((a * b).p_derivative(), a.p_derivative() * b + a * b.p_derivative()));
    CHECK_FALSE(first_difference((a * b).q_derivative(), a.q_derivative() * b + a * b.q_derivative()));
  }
}

TEST_CASE("elliptic substitution") {
  const GridExp t = 8 * G;
  const PQSeries th = theta(ThetaIndex(1), t);
  SUBCASE("theta_1 quasi-periodicity") {
    CHECK_FALSE(first_difference(substitute_elliptic(th, 1), th.times_monomial(Rational(-1), -2, -G / 2)));
  }
  SUBCASE("shear records the moved validity region") {
    const PQSeries s = substitute_elliptic(th, 1);
    // per half-unit of p: lambda * 24 / 2
    CHECK(s.shear() == G / 2);
    CHECK(s.column_trunc(2) > s.column_trunc(-2));
  }
  SUBCASE("zero shift") { CHECK(substitute_elliptic(th, 0) == th); }
  SUBCASE("half period maps theta_3 to theta_4") {
    CHECK_FALSE(first_difference(substitute_half_period(theta(ThetaIndex(3), t)), theta(ThetaIndex(4), t)));
    CHECK_THROWS_AS(substitute_half_period(th), DomainError);
  }
}

TEST_CASE("windows") {
  const GridExp t = 4 * G;
  std::map<long, QExp> cols;
  for (long k = 1; k <= 5; ++k) cols.emplace(2 * k, QExp::constant(Rational(-1), t));
  const PQSeries w = PQSeries::from_columns(cols, t, 10);
  CHECK(w.in_window(10));
  CHECK_FALSE(w.in_window(12));
  CHECK_THROWS_AS(w.coeff(0, 12), WindowError);
  CHECK_THROWS_AS(w * w, WindowError);
  const PQSeries f = PQSeries::monomial(Rational(1), 2, G).truncated(t);
  const PQSeries prod = w * f;
  CHECK(prod.window().has_value());
  CHECK(*prod.window() <= 10 - 2);
  CHECK(prod.coeff(G, 4) == Rational(-1));
}

TEST_CASE("first difference is ordered by n then r") {
  const GridExp t = 3 * G;
  const PQSeries a = phi_weak(WeakKind::minus2, t);
  const PQSeries b = a + PQSeries::monomial(Rational(1), 4, 2 * G) + PQSeries::monomial(Rational(1), -2, 2 * G);
  const auto d = first_difference(a, b);
  REQUIRE(d);
  CHECK(d->n == Rational(2));
  CHECK(d->r == Rational(-1));
}
