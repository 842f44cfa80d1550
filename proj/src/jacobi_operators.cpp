#include "jacobi/jacobi_operators.hpp"

#include <cstdlib>
#include <functional>

#include "jacobi/errors.hpp"
#include "jacobi/linear_solve.hpp"

namespace jacobi {

namespace {

WLaurent one_w() { return WLaurent::monomial(QExp::constant(Rational(1))); }

void require_finite(const WLaurent& f) {
  if (f.wtrunc() >= kExact || f.qtrunc() >= kExact)
    throw DomainError("operator needs finite w- and q-truncations");
}

struct Conjugation {
  VElement f;
  WLaurent phi_m;
  long target = 0;
};

Conjugation conjugate(const JacobiForm& form) {
  const GridExp t = form.fourier.q_trunc();
  const long m = form.index;
  Conjugation c;
  c.target = default_w_trunc(t, m) + 2;
  const long wint = c.target + 4 * m + 8;
  WLaurent fw = fourier_to_w(form.fourier, wint);
  c.phi_m = one_w();
  if (m > 0) {
    c.phi_m = fourier_to_w(phi_weak(WeakKind::minus2, t), wint).pow(m);
    fw = fw * c.phi_m.inverse();
  }
  c.f = VElement{std::move(fw), form.weight + 2 * m, 2 * m};
  return c;
}

JacobiForm finish(const Conjugation& c, const WLaurent& g, const JacobiForm& form) {
  WLaurent back = g * c.phi_m;
  if (back.wtrunc() < c.target) throw InsufficientData("w-precision exhausted by the operator");
  PQSeries out = fourier_reconstruct(back.truncated(c.target), form.index, support_mode(form.kind));
  return JacobiForm{std::move(out), form.weight + 2, form.index, form.kind};
}

WLaurent heat_w(const VElement& f, long n) {
  const WLaurent dtau = v_operator(f, VOperator::dtau).series;
  const WLaurent dz2 = v_operator(v_operator(f, VOperator::dz), VOperator::dz).series;
  WLaurent r = dtau.scaled(Rational(2 * n)) - dz2;
  if (n > 1) r += v_operator(f, VOperator::mul_k, 2).series.scaled(Rational(n * (n - 1)));
  return r;
}

WLaurent t_tau_w(const VElement& f, long n) {
  WLaurent r = v_operator(f, VOperator::dtau).series;
  if (n > 0) r += v_operator(f, VOperator::mul_k, 2).series.scaled(Rational(n));
  return r;
}

void require_even(const JacobiForm& f) {
  if (f.weight % 2 != 0) throw DomainError("operator is defined on even weight only");
}

}  // namespace

SupportMode support_mode(FormKind kind) {
  return kind == FormKind::weak ? SupportMode::weak : SupportMode::holomorphic;
}

QExp serre_modular(const QExp& f, long weight) {
  return f.derivative() - (eisenstein(2, f.trunc()) * f).scaled(Rational(weight, 12));
}

VElement v_operator(const VElement& f, VOperator op, long i) {
  require_finite(f.series);
  const long w = f.series.wtrunc();
  const GridExp t = f.series.qtrunc();
  const long v = std::labs(f.series.valuation());
  switch (op) {
    case VOperator::dz:
      return VElement{f.series.derivative(), f.weight + 1, f.pole_order + 1};
    case VOperator::dtau: {
      const WLaurent j1 = deformed_eisenstein_w(1, w + v + 4, t);
      WLaurent r = f.series.q_derivative() - j1 * f.series.derivative() -
                   f.series.times_qexp(eisenstein(2, t)).scaled(Rational(f.weight, 12));
      return VElement{std::move(r), f.weight + 2, f.pole_order + 2};
    }
    case VOperator::mul_k: {
      if (i < 2) throw DomainError("K_i needs i >= 2");
      const WLaurent k = completion_K(i, w + v + i + 2, t).series;
      return VElement{k * f.series, f.weight + i, f.pole_order + i};
    }
  }
  throw DomainError("unknown operator");
}

JacobiForm heat_operator(const JacobiForm& f) {
  Conjugation c = conjugate(f);
  return finish(c, heat_w(c.f, 2 * f.index), f);
}

QExp t_tau_restriction(const JacobiForm& f) {
  const WLaurent fw = fourier_to_w(f.fourier, 3);
  const QExp f0 = fw.coeff(0);
  const QExp f2 = fw.coeff(2);
  const Rational c = Rational(f.index, 6) - Rational(f.weight, 12);
  return f0.derivative() + (eisenstein(2, f0.trunc()) * f0).scaled(c) - f2.scaled(Rational(2));
}

JacobiForm t_tau_conjugated(const JacobiForm& f) {
  require_even(f);
  Conjugation c = conjugate(f);
  return finish(c, t_tau_w(c.f, 2 * f.index), f);
}

JacobiForm t_tau_operator(const JacobiForm& f) {
  JacobiForm out = t_tau_conjugated(f);
  if (auto d = first_difference(restrict_z0(out.fourier), t_tau_restriction(f)))
    throw RouteMismatch("T_tau at z = 0 differs from its restriction formula at q^" +
                        Rational(*d, QExp::kGrid).str());
  return out;
}

JacobiForm jacobi_serre_explicit(const JacobiForm& f, long weight) {
  const GridExp t = f.fourier.q_trunc();
  const long m = f.index;
  const long target = default_w_trunc(t, m) + 2;
  const long wint = target + 4;
  const WLaurent fw = fourier_to_w(f.fourier, wint);
  const WLaurent j1 = deformed_eisenstein_w(1, wint + 2, t);
  const WLaurent j2 = deformed_eisenstein_w(2, wint + 2, t);
  const QExp e2 = eisenstein(2, t);
  const WLaurent d1 = fw.derivative();
  const WLaurent bracket = d1.derivative() - j1 * d1 + (j2 * fw).scaled(Rational(m)) -
                           fw.times_qexp(e2).scaled(Rational(m, 6));
  const WLaurent r = fw.q_derivative() - fw.times_qexp(e2).scaled(Rational(weight, 12)) +
                     bracket.scaled(Rational(1, 1 - 4 * m));
  if (r.wtrunc() < target) throw InsufficientData("w-precision exhausted by the operator");
  PQSeries out = fourier_reconstruct(r.truncated(target), m, support_mode(f.kind));
  return JacobiForm{std::move(out), f.weight + 2, m, f.kind};
}

JacobiForm jacobi_serre_conjugated(const JacobiForm& f) {
  require_even(f);
  Conjugation c = conjugate(f);
  const long n = 2 * f.index;
  const WLaurent g = (t_tau_w(c.f, n) - heat_w(c.f, n)).scaled(Rational(1, 1 - 4 * f.index));
  return finish(c, g, f);
}

JacobiForm jacobi_serre(const JacobiForm& f) {
  require_even(f);
  JacobiForm explicit_form = jacobi_serre_explicit(f, f.weight);
  const JacobiForm conjugated = jacobi_serre_conjugated(f);
  if (auto d = first_difference(explicit_form.fourier, conjugated.fourier))
    throw RouteMismatch("Jacobi-Serre routes differ at " + d->str());
  return explicit_form;
}

JacobiForm phi_form(WeakKind kind, GridExp qtrunc) {
  return JacobiForm{phi_weak(kind, qtrunc), kind == WeakKind::minus2 ? -2 : 0, 1, FormKind::weak};
}

JacobiForm eisenstein_jacobi(long weight, GridExp qtrunc) {
  if (weight != 4 && weight != 6) throw DomainError("Jacobi-Eisenstein series of weight 4 or 6 only");
  const PQSeries phi0 = phi_weak(WeakKind::zero, qtrunc);
  const PQSeries phim2 = phi_weak(WeakKind::minus2, qtrunc);
  const QExp e4 = eisenstein(4, qtrunc);
  const QExp e6 = eisenstein(6, qtrunc);
  const PQSeries a = phi0.times_qexp(weight == 4 ? e4 : e6);
  const PQSeries b = phim2.times_qexp(weight == 4 ? e6 : e4 * e4);
  IncrementalSolver solver(2);
  solver.add_row({a.coeff(0, 0), b.coeff(0, 0)}, Rational(1));
  solver.add_row({a.coeff(0, 2), b.coeff(0, 2)}, Rational(0));
  const std::vector<Rational> x = solver.solution();
  PQSeries f = a.scaled(x[0]) + b.scaled(x[1]);
  const auto bad = singular_coefficient_check(f, 1, SupportMode::holomorphic);
  if (!bad.empty())
    throw InconsistentSystem("E_{" + std::to_string(weight) + ",1} has a singular coefficient at " +
                                 bad.front().str(),
                             0);
  return JacobiForm{std::move(f), weight, 1, FormKind::holomorphic};
}

JacobiForm e21(GridExp qtrunc) {
  const long w = default_w_trunc(qtrunc, 1) + 6;
  const WLaurent phi = fourier_to_w(phi_weak(WeakKind::minus2, qtrunc), w);
  const WLaurent wp = weierstrass_p(w, qtrunc).series;
  const WLaurent inner = wp.times_qexp(eisenstein(2, qtrunc)) -
                         WLaurent::monomial(eisenstein(4, qtrunc).scaled(Rational(1, 12)));
  PQSeries f = fourier_reconstruct(phi * inner, 1, SupportMode::holomorphic);
  return JacobiForm{std::move(f), 2, 1, FormKind::quasi};
}

}  // namespace jacobi
