#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacobi/deformed_eisenstein.hpp"
#include "jacobi/errors.hpp"

using namespace jacobi;

namespace {

constexpr GridExp G = QExp::kGrid;

// B_n - n sum_{k, r >= 1} r^(n-1) (p^k + (-1)^n p^-k) q^(k r), coefficient by coefficient.
Rational j_coeff(long n, long order, long pk) {
  Rational c = order == 0 && pk == 0 ? bernoulli(n) : Rational(0);
  const long k = pk < 0 ? -pk : pk;
  if (k == 0 || order == 0 || order % k != 0) return c;
  const long r = order / k;
  Rational term = Rational(-n) * Rational(r).pow(n - 1);
  if (pk < 0 && n % 2 != 0) term = -term;
  return c + term;
}

WLaurent cut(const WLaurent& a, long W, GridExp t) { return a.truncated(W, t); }

}  // namespace

TEST_CASE("Fourier coefficients of J_n from the double sum") {
  const long order = 9;
  for (long n = 2; n <= 5; ++n) {
    const PQSeries j = deformed_eisenstein_fourier(n, order * G, 1);
    for (long N = 0; N < order; ++N)
      for (long k = -N - 1; k <= N + 1; ++k) CHECK(j.coeff(N * G, 2 * k) == j_coeff(n, N, k));
  }
  CHECK(deformed_eisenstein_fourier(2, 2 * G, 1).coeff(G, 2) == Rational(-2));
}

TEST_CASE("J_1 expansions on either side of |p| = 1") {
  const GridExp t = 3 * G;
  const PQSeries inner = deformed_eisenstein_fourier(1, t, 4, PExpansion::inner);
  const PQSeries outer = deformed_eisenstein_fourier(1, t, 4, PExpansion::outer);
  CHECK(inner.coeff(0, 0) == Rational(-1, 2));
  CHECK(inner.coeff(0, 6) == Rational(-1));
  CHECK(outer.coeff(0, 0) == Rational(1, 2));
  CHECK(outer.coeff(0, -6) == Rational(1));
  // the two differ by p/(p-1) expanded both ways: sum over all integer p-powers
  const PQSeries diff = outer - inner;
  for (long k = -4; k <= 4; ++k) CHECK(diff.coeff(0, 2 * k) == Rational(1));
  CHECK_THROWS_AS(deformed_eisenstein_fourier(1, t, 0), WindowError);
  CHECK_THROWS_AS(deformed_eisenstein_fourier(0, t, 2), DomainError);
}

TEST_CASE("w-layer J_n agrees with the Fourier form") {
  const GridExp t = 6 * G;
  const long W = 12;
  for (long n = 2; n <= 7; ++n)
    CHECK_FALSE(first_difference(fourier_to_w(deformed_eisenstein_fourier(n, t, 1), W),
                                 deformed_eisenstein_w(n, W, t)));
}

TEST_CASE("J_n at z = 0 and parity") {
  const GridExp t = 8 * G;
  for (long n = 2; n <= 8; ++n) {
    const WLaurent j = deformed_eisenstein_w(n, 10, t);
    const QExp expect = n % 2 == 0 ? eisenstein(n, t).scaled(bernoulli(n)) : QExp::zero(t);
    CHECK(eval_w0(j) == expect);
    CHECK(j.substitute_w(Rational(-1)) == j.scaled(Rational(n % 2 == 0 ? 1 : -1)));
  }
  const WLaurent j1 = deformed_eisenstein_w(1, 10, t);
  CHECK(j1.valuation() == -1);
  CHECK(j1.coeff(-1) == QExp::constant(Rational(1), t));
}

TEST_CASE("Weierstrass wp") {
  const GridExp t = 8 * G;
  const long W = 12;
  const WLaurent wp = weierstrass_p(W, t).series;
  CHECK(wp.coeff(-2) == QExp::constant(Rational(1), t));
  CHECK(wp.coeff(0).is_zero());
  for (long n = 1; 2 * n < W; ++n) {
    const Rational c = Rational(-(2 * n + 1)) * bernoulli(2 * n + 2) / Rational(factorial(2 * n + 2));
    CHECK(wp.coeff(2 * n) == eisenstein(2 * n + 2, t).scaled(c));
  }
  CHECK(wp.coeff(2) == eisenstein(4, t).scaled(Rational(1, 240)));
  SUBCASE("differential equation (wp^.)^2 = 4 wp^3 - E_4 wp / 12 + E_6 / 216") {
    const WLaurent d = wp.derivative();
    const WLaurent rhs = wp.pow(3).scaled(Rational(4)) - wp.times_qexp(eisenstein(4, t).scaled(Rational(1, 12))) +
                         WLaurent::monomial(eisenstein(6, t).scaled(Rational(1, 216)));
    CHECK_FALSE(first_difference(d * d, rhs));
  }
}

TEST_CASE("completions") {
  const GridExp t = 8 * G;
  const long W = 10;
  CHECK_FALSE(first_difference(completion_K(2, W, t).series, -weierstrass_p(W, t).series));
  for (long n = 2; n <= 6; ++n) {
    const VElement k = completion_K(n, W, t);
    CHECK(k.weight == n);
    CHECK(k.pole_order == n);
    CHECK(k.series.valuation() == -n);
    CHECK(k.series == completion_K_recursive(n, W, t));
  }
  SUBCASE("K_2^2 decomposes as -K_4 / 3 + E_4 / 60") {
    const WLaurent k2 = completion_K_explicit(2, W, t);
    const KDecomposition d = decompose_in_k_basis(VElement{k2 * k2, 4, 4});
    REQUIRE(d.consistent);
    CHECK(d.coefficients[4] == QExp::constant(Rational(-1, 3), t));
    CHECK(d.coefficients[2].is_zero());
    CHECK(d.coefficients[0] == eisenstein(4, t).scaled(Rational(1, 60)));
  }
  SUBCASE("J_2 is not in the span") {
    const KDecomposition d = decompose_in_k_basis(VElement{deformed_eisenstein_w(2, W, t), 2, 0});
    CHECK_FALSE(d.consistent);
  }
}

TEST_CASE("theta variants") {
  const GridExp t = 6 * G;
  const long W = 10;
  for (int i = 2; i <= 4; ++i)
    for (long n = 1; n <= 4; ++n) {
      CAPTURE(i);
      CAPTURE(n);
      CHECK_FALSE(first_difference(theta_variant_concrete(i, n, W, t), theta_variant_definition(i, n, W, t)));
      if (i != 2 || n != 1)
        CHECK_FALSE(first_difference(fourier_to_w(theta_variant_fourier(i, n, t, 1), W),
                                     deformed_eisenstein_theta_variant(i, n, W, t)));
    }
  SUBCASE("half-shift constants") {
    for (long n : {2L, 4L}) {
      const Rational c = -bernoulli(n) * (Rational(1) - Rational(2).pow(1 - n));
      CHECK(theta_variant_concrete(4, n, W, t).coeff(0).coeff(0) == c);
      CHECK(theta_variant_concrete(3, n, W, t).coeff(0).coeff(0) == c);
    }
  }
  SUBCASE("J_{2,1} carries e^w / (e^w + 1)") {
    const WLaurent j = theta_variant_concrete(2, 1, W, t);
    CHECK(j.valuation() == 1);
    CHECK(j.coeff(1).coeff(0) == Rational(1, 4));
    CHECK(j.coeff(3).coeff(0) == Rational(-1, 48));
  }
  CHECK_THROWS_AS(theta_variant_concrete(5, 2, W, t), DomainError);
}
