#include "jacobi/theta_structure.hpp"

#include "jacobi/deformed_eisenstein.hpp"
#include "jacobi/errors.hpp"

namespace jacobi {

namespace {

QExp derivative_at_zero(const PQSeries& theta1) { return restrict_z0(theta1.p_derivative()); }

Rational inverse_factorial(long n) { return Rational(mpq_class(1, factorial(n))); }

WLaurent nth_derivative(WLaurent f, long k) {
  for (long i = 0; i < k; ++i) f = f.derivative();
  return f;
}

}  // namespace

std::vector<QExp> theta_p_recursion(long k_max, GridExp qtrunc) {
  const QExp e2 = eisenstein(2, qtrunc);
  std::vector<QExp> p{QExp::constant(Rational(1), qtrunc)};
  for (long k = 0; k < k_max; ++k) p.push_back(p.back().derivative() + (e2 * p.back()).scaled(Rational(1, 8)));
  return p;
}

std::vector<QExp> theta_odd_derivatives_at_zero(const PQSeries& theta1, long k_max, GridExp qtrunc) {
  const WLaurent tw = fourier_to_w(theta1, 2 * k_max + 2);
  std::vector<QExp> out;
  for (long k = 0; k <= k_max; ++k)
    out.push_back(tw.coeff(2 * k + 1).scaled(Rational(factorial(2 * k + 1))).truncated(qtrunc));
  return out;
}

std::vector<QExp> theta_even_ratios_at_zero(const PQSeries& theta1, long k_max, GridExp qtrunc) {
  const WLaurent tw = fourier_to_w(theta1, 2 * k_max + 4);
  const WLaurent inv = tw.inverse();
  std::vector<QExp> out;
  for (long k = 0; k <= k_max; ++k) out.push_back(eval_w0(nth_derivative(tw, 2 * k) * inv).truncated(qtrunc));
  return out;
}

std::vector<QExp> theta_tau_ratios_at_zero(const PQSeries& theta1, long k_max, GridExp qtrunc) {
  const WLaurent inv = fourier_to_w(theta1, 4).inverse();
  std::vector<QExp> out;
  PQSeries d = theta1;
  for (long k = 0; k <= k_max; ++k) {
    out.push_back(eval_w0(fourier_to_w(d, 4) * inv).truncated(qtrunc));
    d = d.q_derivative();
  }
  return out;
}

std::vector<QExp> h_by_recursion(long n_max, const std::vector<QExp>& P) {
  const GridExp t = P.empty() ? kExact : P.front().trunc();
  std::vector<QExp> h(static_cast<std::size_t>(n_max + 1), QExp::zero(t));
  h[0] = QExp::constant(Rational(1), t);
  for (long m = 1; 2 * m <= n_max; ++m) {
    if (static_cast<long>(P.size()) <= m) throw InsufficientData("P_k recursion too short for h_n");
    QExp s = QExp::zero(t);
    for (long k = 1; k <= m; ++k) {
      const Rational c = Rational(2).pow(k) * inverse_factorial(2 * m - 2 * k) * inverse_factorial(2 * k + 1);
      s += (h[static_cast<std::size_t>(2 * m - 2 * k)] * P[static_cast<std::size_t>(k)]).scaled(c);
    }
    h[static_cast<std::size_t>(2 * m)] = s.scaled(-Rational(factorial(2 * m)));
  }
  return h;
}

ThetaInverseData theta_inverse_coefficients(const PQSeries& theta1, long n_max, GridExp qtrunc) {
  const WLaurent inv = fourier_to_w(theta1, n_max + 3).inverse();
  const QExp g = derivative_at_zero(theta1);
  ThetaInverseData d;
  for (long n = 0; n <= n_max; ++n) {
    const QExp ht = inv.coeff(n - 1);
    d.h_tilde.push_back(ht.truncated(qtrunc));
    d.h.push_back((ht * g).scaled(Rational(factorial(n))).truncated(qtrunc));
  }
  d.P = theta_p_recursion(n_max / 2, qtrunc);
  return d;
}

ThetaInverseData theta_inverse_data(const PQSeries& theta1, long n_max, GridExp qtrunc) {
  ThetaInverseData d = theta_inverse_coefficients(theta1, n_max, qtrunc);
  const WLaurent inv = fourier_to_w(theta1, n_max + 3).inverse();
  const QExp g = derivative_at_zero(theta1);
  const long k_max = n_max / 2;
  const std::vector<QExp> odd = theta_odd_derivatives_at_zero(theta1, k_max, qtrunc);
  for (long k = 0; k <= k_max; ++k) {
    const QExp expected = (g * d.P[static_cast<std::size_t>(k)]).scaled(Rational(2).pow(k)).truncated(qtrunc);
    if (auto e = first_difference(odd[static_cast<std::size_t>(k)], expected))
      throw RouteMismatch("theta^(" + std::to_string(2 * k + 1) + ".)(0) differs from 2^k g P_k at q^" +
                          Rational(*e, QExp::kGrid).str());
  }
  for (long m = 1; 2 * m <= n_max; ++m) {
    QExp s = QExp::zero(qtrunc);
    for (long k = 0; k <= m; ++k)
      s += (inv.coeff(2 * m - 2 * k - 1) * odd[static_cast<std::size_t>(k)]).scaled(inverse_factorial(2 * k + 1));
    if (auto e = first_difference(s, QExp::zero(qtrunc)))
      throw RouteMismatch("w^" + std::to_string(2 * m) + " coefficient of theta / theta is nonzero at q^" +
                          Rational(*e, QExp::kGrid).str());
  }
  const std::vector<QExp> rec = h_by_recursion(n_max, d.P);
  for (long n = 0; n <= n_max; ++n)
    if (auto e = first_difference(d.h[static_cast<std::size_t>(n)], rec[static_cast<std::size_t>(n)]))
      throw RouteMismatch("h_" + std::to_string(n) + " differs from its recursion at q^" +
                          Rational(*e, QExp::kGrid).str());
  return d;
}

ThetaInverseData theta_inverse_data(long n_max, GridExp qtrunc) {
  return theta_inverse_data(theta(ThetaIndex(1), qtrunc + kThetaPad), n_max, qtrunc);
}

WLaurent f_n(const PQSeries& theta1, const PQSeries& theta_i, long n, long wtrunc, GridExp qtrunc) {
  if (n < 0) throw DomainError("F_n needs n >= 0");
  const ThetaInverseData d = theta_inverse_coefficients(theta1, n, qtrunc);
  const WLaurent tw = fourier_to_w(theta_i, wtrunc + n + 3);
  WLaurent sum;
  WLaurent deriv = tw;
  for (long k = 0; k <= n; ++k) {
    sum += deriv.times_qexp(d.h[static_cast<std::size_t>(n - k)]).scaled(Rational(binomial(n, k)));
    deriv = deriv.derivative();
  }
  return (sum * tw.inverse()).truncated(wtrunc, qtrunc);
}

WLaurent f_n(long n, ThetaIndex i, long wtrunc, GridExp qtrunc) {
  const PQSeries theta1 = theta(ThetaIndex(1), qtrunc + kThetaPad);
  const PQSeries theta_i = i.value == 1 ? theta1 : theta(i, qtrunc + kThetaPad);
  return f_n(theta1, theta_i, n, wtrunc, qtrunc);
}

PQSeries phi_from_theta(const PQSeries& theta1, GridExp qtrunc) {
  const QExp g = derivative_at_zero(theta1);
  return (theta1 * theta1).times_qexp((g * g).inverse()).truncated(qtrunc);
}

std::vector<PQSeries> theta_corollary_terms(const PQSeries& theta1) {
  const PQSeries d1 = theta1.p_derivative();
  const PQSeries d2 = d1.p_derivative();
  const PQSeries d3 = d2.p_derivative();
  const PQSeries d4 = d3.p_derivative();
  const QExp e2 = eisenstein(2, theta1.q_trunc());
  return {
      d4 * theta1,
      (d3 * d1).scaled(Rational(-4)),
      (d2 * d2).scaled(Rational(3)),
      (theta1 * d2).times_qexp(e2).scaled(Rational(-1)),
      (d1 * d1).times_qexp(e2),
      (theta1 * theta1).times_qexp(e2.derivative()).scaled(Rational(1, 2)),
  };
}

PQSeries theta_corollary_residual(const PQSeries& theta1) {
  PQSeries sum;
  for (const PQSeries& t : theta_corollary_terms(theta1)) sum += t;
  return sum;
}

PQSeries shifted_combination(int i, long n, const std::vector<PQSeries>& j) {
  if (i < 2 || i > 4) throw DomainError("theta variant index must be 2, 3 or 4");
  if (n < 1) throw DomainError("J_{i,n} needs n >= 1");
  if (static_cast<long>(j.size()) <= n) throw InsufficientData("shift formula needs J_0 .. J_n");
  if (i == 2) return substitute_half_period(j[static_cast<std::size_t>(n)]);
  PQSeries sum;
  for (long l = 0; l <= n; ++l) {
    const Rational c = Rational(binomial(n, l)) * Rational(2).pow(l - n);
    sum += substitute_p(j[static_cast<std::size_t>(l)], Rational(1, 2), i == 3).scaled(c);
  }
  return sum;
}

PQSeries shifted_deformed_eisenstein(int i, long n, GridExp qtrunc, long window) {
  std::vector<PQSeries> j{PQSeries::from_qexp(QExp::constant(Rational(1), qtrunc))};
  for (long l = 1; l <= n; ++l) j.push_back(deformed_eisenstein_fourier(l, qtrunc, window));
  return shifted_combination(i, n, j);
}

}  // namespace jacobi
