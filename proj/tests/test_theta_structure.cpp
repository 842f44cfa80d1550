#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacobi/deformed_eisenstein.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/theta_structure.hpp"

using namespace jacobi;

namespace {

constexpr GridExp G = QExp::kGrid;
constexpr GridExp T = 6 * G;

PQSeries theta1(GridExp t = T) { return theta(ThetaIndex(1), t + kThetaPad); }

}  // namespace

TEST_CASE("h coefficients") {
  const ThetaInverseData d = theta_inverse_data(8, T);
  const QExp e2 = eisenstein(2, T);
  CHECK(d.h[0] == QExp::constant(Rational(1), T));
  for (long n = 1; n <= 7; n += 2) CHECK(d.h[n].is_zero());
  CHECK(d.h[2] == e2.scaled(Rational(-1, 12)));
  CHECK(equal_within_truncation(d.h[4], (e2 * e2).scaled(Rational(7, 240)) - e2.derivative().scaled(Rational(1, 10))));
  CHECK(d.h[2].coeff(G) == Rational(2));
  CHECK(d.h[4].coeff(0) == Rational(7, 240));
}

TEST_CASE("P recursion") {
  const auto p = theta_p_recursion(3, T);
  const QExp e2 = eisenstein(2, T);
  CHECK(p[0] == QExp::constant(Rational(1), T));
  CHECK(p[1] == e2.scaled(Rational(1, 8)));
  CHECK(equal_within_truncation(p[2], p[1].derivative() + (e2 * p[1]).scaled(Rational(1, 8))));
  const auto tau = theta_tau_ratios_at_zero(theta1(), 3, T);
  for (long k = 0; k <= 3; ++k) CHECK(equal_within_truncation(tau[k], p[k]));
}

TEST_CASE("odd derivatives and even ratios") {
  const PQSeries th = theta1();
  const auto odd = theta_odd_derivatives_at_zero(th, 3, T);
  const auto even = theta_even_ratios_at_zero(th, 3, T);
  const auto p = theta_p_recursion(3, T);
  CHECK(odd[0] == theta_z_derivative_at_zero(T));
  for (long k = 0; k <= 3; ++k) {
    CHECK(equal_within_truncation(odd[k], (odd[0] * p[k]).scaled(Rational(2).pow(k))));
    CHECK(equal_within_truncation(even[k], p[k].scaled(Rational(2).pow(k))));
  }
}

TEST_CASE("recursion route for h") {
  const ThetaInverseData d = theta_inverse_data(8, T);
  const auto rec = h_by_recursion(8, theta_p_recursion(4, T));
  for (long n = 0; n <= 8; ++n) CHECK(equal_within_truncation(rec[n], d.h[n]));
}

TEST_CASE("F_n = J_n") {
  const long W = 10;
  for (long n = 0; n <= 6; ++n)
    CHECK_FALSE(first_difference(f_n(n, ThetaIndex(1), W, T), deformed_eisenstein_w(n, W, T)));
  CHECK(f_n(0, ThetaIndex(1), W, T) == WLaurent::monomial(QExp::constant(Rational(1), T)).truncated(W, T));
  for (int i = 2; i <= 4; ++i)
    for (long n = 1; n <= 4; ++n)
      CHECK_FALSE(first_difference(f_n(n, ThetaIndex(i), W, T), theta_variant_concrete(i, n, W, T)));
  CHECK_THROWS_AS(f_n(-1, ThetaIndex(1), W, T), DomainError);
}

TEST_CASE("phi_{-2,1} from theta_1") {
  CHECK_FALSE(first_difference(phi_from_theta(theta1(), T), phi_weak(WeakKind::minus2, T)));
}

TEST_CASE("invariance under rescaling theta_1") {
  const PQSeries th = theta1();
  const PQSeries s = th.scaled(Rational(-5, 7));
  const ThetaInverseData a = theta_inverse_data(th, 6, T), b = theta_inverse_data(s, 6, T);
  for (long n = 0; n <= 6; ++n) CHECK(a.h[n] == b.h[n]);
  for (std::size_t k = 0; k < a.P.size(); ++k) CHECK(a.P[k] == b.P[k]);
  CHECK(f_n(th, th, 4, 8, T) == f_n(s, s, 4, 8, T));
  CHECK(phi_from_theta(s, T) == phi_from_theta(th, T));
}

TEST_CASE("fourth-order differential relation of theta_1") {
  const PQSeries th = theta(ThetaIndex(1), 10 * G);
  CHECK(theta_corollary_residual(th).is_zero());
  const auto terms = theta_corollary_terms(th);
  REQUIRE(terms.size() == 6);
  PQSeries sum = PQSeries::zero(th.q_trunc());
  for (const PQSeries& t : terms) {
    CHECK_FALSE(t.is_zero());
    sum += t;
  }
  CHECK_FALSE(first_difference(sum, PQSeries::zero(sum.q_trunc())));
  // the q^(1/4) layer cancels although individual terms carry it
  bool leading = false;
  for (const PQSeries& t : terms)
    for (long p = -4; p <= 4; p += 2) leading = leading || !t.coeff(6, p).is_zero();
  CHECK(leading);
  for (long p = -4; p <= 4; p += 2) CHECK(sum.coeff(6, p) == Rational(0));
}

TEST_CASE("shift formulas") {
  const long window = 6;
  for (int i = 2; i <= 4; ++i)
    for (long n = 1; n <= 4; ++n) {
      CAPTURE(i);
      CAPTURE(n);
      CHECK_FALSE(first_difference(shifted_deformed_eisenstein(i, n, T, window), theta_variant_fourier(i, n, T, window)));
    }
  CHECK_THROWS_AS(shifted_combination(3, 4, {PQSeries::zero(T)}), InsufficientData);
}
