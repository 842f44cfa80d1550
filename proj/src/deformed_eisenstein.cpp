#include "jacobi/deformed_eisenstein.hpp"

#include <map>
#include <utility>

#include "jacobi/errors.hpp"

namespace jacobi {

namespace {

struct SumTerm {
  long k;
  GridExp exponent;
  Rational weight;  // s_k * rho^(n-1)
};

// Pairs (k, r) of -n sum s_k rho^(n-1) (p^k + (-1)^n p^-k) q^(k rho), where
// rho = r or r - 1/2 and s_k = (-1)^k when alternating.
std::vector<SumTerm> double_sum_terms(long n, GridExp qtrunc, bool half, bool alternating) {
  if (qtrunc >= kExact) throw DomainError("deformed Eisenstein series need a finite q-truncation");
  std::vector<SumTerm> out;
  for (long k = 1;; ++k) {
    const GridExp first = half ? k * QExp::kGrid / 2 : k * QExp::kGrid;
    if (first >= qtrunc) break;
    for (long r = 1;; ++r) {
      const GridExp e = half ? k * (2 * r - 1) * QExp::kGrid / 2 : k * r * QExp::kGrid;
      if (e >= qtrunc) break;
      const Rational rho = half ? Rational(2 * r - 1, 2) : Rational(r);
      Rational c = rho.pow(n - 1);
      if (alternating && k % 2 != 0) c = -c;
      out.push_back(SumTerm{k, e, c});
    }
  }
  return out;
}

WLaurent double_sum_w(long n, long wtrunc, GridExp qtrunc, bool half, bool alternating) {
  const std::vector<SumTerm> terms = double_sum_terms(n, qtrunc, half, alternating);
  std::map<long, QExp> out;
  for (long j = 0; j < wtrunc; ++j) {
    if ((n + j) % 2 != 0) continue;
    const Rational scale = Rational(-2 * n) * Rational(mpq_class(1, factorial(j)));
    std::vector<QExp::Term> q;
    q.reserve(terms.size());
    for (const SumTerm& t : terms) q.emplace_back(t.exponent, scale * t.weight * Rational(t.k).pow(j));
    out.emplace(j, QExp::from_terms(std::move(q), qtrunc));
  }
  return WLaurent::from_terms(std::move(out), wtrunc, qtrunc);
}

std::map<long, std::vector<QExp::Term>> double_sum_columns(long n, GridExp qtrunc, bool half,
                                                           bool alternating) {
  std::map<long, std::vector<QExp::Term>> cols;
  const Rational reflect(n % 2 == 0 ? 1 : -1);
  for (const SumTerm& t : double_sum_terms(n, qtrunc, half, alternating)) {
    const Rational c = Rational(-n) * t.weight;
    cols[2 * t.k].emplace_back(t.exponent, c);
    cols[-2 * t.k].emplace_back(t.exponent, c * reflect);
  }
  return cols;
}

PQSeries assemble(std::map<long, std::vector<QExp::Term>> cols, GridExp qtrunc,
                  std::optional<long> window) {
  std::map<long, QExp> out;
  for (auto& [p, terms] : cols) out.emplace(p, QExp::from_terms(std::move(terms), qtrunc));
  return PQSeries::from_columns(std::move(out), qtrunc, window);
}

// e^w / (e^w + sign), exact in q.
WLaurent exp_quotient(long wtrunc, long sign) {
  const WLaurent w = WLaurent::monomial(QExp::constant(Rational(1)), 1).truncated(wtrunc + 2);
  const WLaurent e = w_exp(w);
  const WLaurent one = WLaurent::monomial(QExp::constant(Rational(1)));
  return (e * (e + one.scaled(Rational(sign))).inverse()).truncated(wtrunc);
}

WLaurent constant_w(const Rational& c, long wtrunc, GridExp qtrunc) {
  return WLaurent::from_terms({{0, QExp::constant(c)}}, wtrunc, qtrunc);
}

void check_variant(int i) {
  if (i < 2 || i > 4) throw DomainError("theta variant index must be 2, 3 or 4");
}

// -B_n (1 - 2^(1-n)).
Rational half_shift_constant(long n) {
  return -bernoulli(n) * (Rational(1) - Rational(2).pow(1 - n));
}

}  // namespace

WLaurent deformed_eisenstein_w(long n, long wtrunc, GridExp qtrunc) {
  if (n < 0) throw DomainError("J_n needs n >= 0");
  WLaurent r = constant_w(bernoulli(n), wtrunc, qtrunc);
  if (n == 0) return r;
  r += double_sum_w(n, wtrunc, qtrunc, false, false);
  if (n == 1) r += exp_quotient(wtrunc, -1);
  return r;
}

PQSeries deformed_eisenstein_fourier(long n, GridExp qtrunc, long window, PExpansion expansion) {
  if (n < 1) throw DomainError("Fourier form of J_n needs n >= 1");
  auto cols = double_sum_columns(n, qtrunc, false, false);
  cols[0].emplace_back(0, bernoulli(n));
  if (n != 1) return assemble(std::move(cols), qtrunc, std::nullopt);
  if (window < 1) throw WindowError("J_1 needs a p-window of at least 1");
  if (expansion == PExpansion::inner) {
    for (long k = 1; k <= window; ++k) cols[2 * k].emplace_back(0, Rational(-1));
  } else {
    for (long k = 0; k <= window; ++k) cols[-2 * k].emplace_back(0, Rational(1));
  }
  return assemble(std::move(cols), qtrunc, 2 * window);
}

namespace {

struct JTable {
  std::vector<WLaurent> j;
  std::vector<WLaurent> j1_pow;
};

JTable j_table(long n, long wtrunc, GridExp qtrunc) {
  const long w = wtrunc + n + 1;
  JTable t;
  for (long k = 0; k <= n; ++k) t.j.push_back(deformed_eisenstein_w(k, w, qtrunc));
  t.j1_pow.push_back(constant_w(Rational(1), w, qtrunc));
  for (long k = 1; k <= n; ++k) t.j1_pow.push_back(t.j1_pow.back() * t.j[1]);
  return t;
}

}  // namespace

WLaurent completion_from_j(const std::vector<WLaurent>& j, long n) {
  if (n < 2) throw DomainError("K_n needs n >= 2");
  if (static_cast<long>(j.size()) <= n) throw InsufficientData("K_n needs J_0 .. J_n");
  WLaurent power = WLaurent::monomial(QExp::constant(Rational(1)));
  WLaurent sum;
  for (long k = n; k >= 0; --k) {
    const Rational c = Rational((n + k) % 2 == 0 ? 1 : -1) * Rational(binomial(n, k));
    sum += (j[static_cast<std::size_t>(k)] * power).scaled(c);
    power = power * j[1];
  }
  return sum;
}

WLaurent completion_K_explicit(long n, long wtrunc, GridExp qtrunc) {
  if (n < 2) throw DomainError("K_n needs n >= 2");
  const JTable t = j_table(n, wtrunc, qtrunc);
  return completion_from_j(t.j, n).truncated(wtrunc, qtrunc);
}

WLaurent completion_K_recursive(long n, long wtrunc, GridExp qtrunc) {
  if (n < 2) throw DomainError("K_n needs n >= 2");
  const JTable t = j_table(n, wtrunc, qtrunc);
  std::vector<WLaurent> k(static_cast<std::size_t>(n + 1));
  for (long m = 2; m <= n; ++m) {
    WLaurent v = t.j[static_cast<std::size_t>(m)] - t.j1_pow[static_cast<std::size_t>(m)];
    for (long q = 2; q < m; ++q)
      v -= (k[static_cast<std::size_t>(q)] * t.j1_pow[static_cast<std::size_t>(m - q)])
               .scaled(Rational(binomial(m, q)));
    k[static_cast<std::size_t>(m)] = std::move(v);
  }
  return k[static_cast<std::size_t>(n)].truncated(wtrunc, qtrunc);
}

VElement completion_K(long n, long wtrunc, GridExp qtrunc) {
  WLaurent explicit_form = completion_K_explicit(n, wtrunc, qtrunc);
  WLaurent recursive_form = completion_K_recursive(n, wtrunc, qtrunc);
  if (auto d = first_difference(explicit_form, recursive_form))
    throw RouteMismatch("K_" + std::to_string(n) + ": explicit and recursive forms differ at " + d->str());
  return VElement{std::move(explicit_form), n, n};
}

VElement weierstrass_p(long wtrunc, GridExp qtrunc) {
  std::map<long, QExp> terms;
  terms.emplace(-2, QExp::constant(Rational(1)));
  for (long n = 1; 2 * n < wtrunc; ++n) {
    const Rational c = -Rational(2 * n + 1) * bernoulli(2 * n + 2) *
                       Rational(mpq_class(1, factorial(2 * n + 2)));
    terms.emplace(2 * n, eisenstein(2 * n + 2, qtrunc).scaled(c));
  }
  return VElement{WLaurent::from_terms(std::move(terms), wtrunc, qtrunc), 2, 2};
}

WLaurent theta_variant_definition(int i, long n, long wtrunc, GridExp qtrunc) {
  check_variant(i);
  if (n < 1) throw DomainError("J_{i,n} needs n >= 1");
  const WLaurent j = deformed_eisenstein_w(n, wtrunc, qtrunc);
  const auto doubled_tau = [&] {
    return deformed_eisenstein_w(n, wtrunc, (qtrunc + 1) / 2).substitute_q(Rational(2));
  };
  const auto halved_tau = [&] {
    return deformed_eisenstein_w(n, wtrunc, 2 * qtrunc).substitute_q(Rational(1, 2));
  };
  WLaurent r;
  if (i == 2) {
    r = doubled_tau().substitute_w(Rational(2)).scaled(Rational(2)) - j;
  } else if (i == 3) {
    r = j.substitute_w(Rational(2)).scaled(Rational(2).pow(2 - n)) -
        doubled_tau().substitute_w(Rational(2)).scaled(Rational(2)) + j -
        halved_tau().scaled(Rational(2).pow(1 - n));
  } else {
    r = halved_tau().scaled(Rational(2).pow(1 - n)) - j;
  }
  return r.truncated(wtrunc, qtrunc);
}

WLaurent theta_variant_concrete(int i, long n, long wtrunc, GridExp qtrunc) {
  check_variant(i);
  if (n < 1) throw DomainError("J_{i,n} needs n >= 1");
  if (i == 2) {
    WLaurent r = constant_w(bernoulli(n), wtrunc, qtrunc) + double_sum_w(n, wtrunc, qtrunc, false, true);
    if (n == 1) r += exp_quotient(wtrunc, 1);
    return r;
  }
  return constant_w(half_shift_constant(n), wtrunc, qtrunc) +
         double_sum_w(n, wtrunc, qtrunc, true, i == 3);
}

WLaurent deformed_eisenstein_theta_variant(int i, long n, long wtrunc, GridExp qtrunc) {
  WLaurent concrete = theta_variant_concrete(i, n, wtrunc, qtrunc);
  WLaurent definition = theta_variant_definition(i, n, wtrunc, qtrunc);
  if (auto d = first_difference(concrete, definition))
    throw RouteMismatch("J_{" + std::to_string(i) + "," + std::to_string(n) +
                        "}: closed form and definition differ at " + d->str());
  return concrete;
}

PQSeries theta_variant_fourier(int i, long n, GridExp qtrunc, long window) {
  check_variant(i);
  if (n < 1) throw DomainError("J_{i,n} needs n >= 1");
  auto cols = double_sum_columns(n, qtrunc, i != 2, i != 4);
  cols[0].emplace_back(0, i == 2 ? bernoulli(n) : half_shift_constant(n));
  if (i != 2 || n != 1) return assemble(std::move(cols), qtrunc, std::nullopt);
  if (window < 1) throw WindowError("J_{2,1} needs a p-window of at least 1");
  for (long k = 1; k <= window; ++k) cols[2 * k].emplace_back(0, Rational(k % 2 == 0 ? -1 : 1));
  return assemble(std::move(cols), qtrunc, 2 * window);
}

KDecomposition decompose_in_k_basis(const VElement& f) {
  KDecomposition out;
  const long top = std::max(f.pole_order, 0L);
  if (f.series.valuation() < -top) throw DomainError("series has a pole beyond its certified order");
  out.coefficients.assign(static_cast<std::size_t>(top + 1), QExp::zero(f.series.qtrunc()));
  WLaurent rest = f.series;
  for (long d = top; d >= 2; --d) {
    const Rational lead((d + 1) % 2 == 0 ? d - 1 : -(d - 1));
    const QExp c = rest.coeff(-d).scaled(lead.inverse());
    out.coefficients[static_cast<std::size_t>(d)] = c;
    if (c.is_zero()) continue;
    const WLaurent k = completion_K(d, rest.wtrunc(), rest.qtrunc()).series;
    rest -= k.times_qexp(c);
  }
  for (const auto& [e, c] : rest.terms()) {
    if (e == 0) continue;
    if (auto q = first_difference(c, QExp::zero(c.trunc()))) {
      out.residual = WPoint{e, Rational(*q, QExp::kGrid)};
      return out;
    }
  }
  out.coefficients[0] = rest.coeff(0);
  bool ok = true;
  for (long d = 0; d <= top; ++d) {
    if (d == 1) continue;
    const QExp& c = out.coefficients[static_cast<std::size_t>(d)];
    const long weight = f.weight - d;
    if (weight < 0) {
      ModularFit fit;
      fit.consistent = c.is_zero();
      if (!c.is_zero()) fit.first_mismatch = c.valuation() / QExp::kGrid;
      ok = ok && fit.consistent;
      out.fits.push_back(std::move(fit));
      continue;
    }
    out.fits.push_back(express_in_modular_basis(c, weight));
    ok = ok && out.fits.back().consistent;
  }
  out.consistent = ok;
  return out;
}

}  // namespace jacobi
