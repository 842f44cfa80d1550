#include "jacobi/suites.hpp"

#include <algorithm>
#include <functional>

#include "jacobi/deformed_eisenstein.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/theta_structure.hpp"

namespace jacobi {

namespace {

Rational sign_pow(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

std::string idx(long n) { return std::to_string(n); }

WLaurent constant_w(const QExp& c) { return WLaurent::monomial(c); }

std::optional<FailureLocation> first_of(std::initializer_list<std::function<std::optional<FailureLocation>()>> parts) {
  for (const auto& p : parts)
    if (auto f = p()) return f;
  return std::nullopt;
}

// Memoized value whose computation may throw inside a check body.
template <class T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> make) : make_(std::move(make)) {}
  const T& get() {
    if (!value_) value_ = make_();
    return *value_;
  }

 private:
  std::function<T()> make_;
  std::optional<T> value_;
};

std::optional<FailureLocation> zero_check(const QExp& a) { return compare(a, QExp::zero(a.trunc())); }

std::optional<FailureLocation> zero_check(const PQSeries& a) {
  return compare(a, PQSeries::zero(a.q_trunc()));
}

}  // namespace

long default_wmax(const Rational& qmax) {
  const Rational x = Rational(4) * qmax + Rational(1);
  long r = 0;
  while (Rational((r + 1) * (r + 1)) <= x) ++r;
  return 2 * r + 4;
}

SuiteConfig make_config(const Rational& qmax, std::optional<long> wmax, std::optional<long> window,
                        std::optional<long> nmax) {
  if (qmax <= Rational(0)) throw DomainError("qmax must be positive");
  const Rational t = qmax * Rational(QExp::kGrid);
  if (!t.is_integer()) throw GridError("qmax must lie on the 1/24 grid");
  SuiteConfig c;
  c.qtrunc = t.to_long();
  c.wtrunc = wmax.value_or(default_wmax(qmax));
  if (c.wtrunc < 2) throw DomainError("wmax must be at least 2");
  c.window = window.value_or(std::max(qmax.ceil().to_long(), 1L));
  if (c.window < 1) throw DomainError("window must be at least 1");
  c.nmax = nmax.value_or(8);
  if (c.nmax < 1) throw DomainError("nmax must be at least 1");
  return c;
}

// ---------------------------------------------------------------- relations

RelationsContext make_relations_context(const SuiteConfig& config) {
  RelationsContext ctx;
  ctx.config = config;
  const long w = config.wtrunc + 8;
  const GridExp t = config.qtrunc;
  for (long n = 0; n <= std::max(config.nmax + 1, 4L); ++n) ctx.j.push_back(deformed_eisenstein_w(n, w, t));
  ctx.wp = weierstrass_p(w, t).series;
  ctx.j_fourier.push_back(PQSeries::from_qexp(QExp::constant(Rational(1), t)));
  for (long n = 1; n <= 3; ++n)
    ctx.j_fourier.push_back(deformed_eisenstein_fourier(n, t, config.window, PExpansion::outer));
  return ctx;
}

Report run_relations_checks(const RelationsContext& ctx) {
  Report report("relations");
  const SuiteConfig& cfg = ctx.config;
  const GridExp t = cfg.qtrunc;
  const auto& j = ctx.j;
  const QExp e2 = eisenstein(2, t);
  const QExp e4 = eisenstein(4, t);
  const auto cut = [&](const WLaurent& a) { return a.truncated(cfg.wtrunc, t); };

  for (long k = 1; k <= cfg.nmax; ++k) {
    report.run("derivative relation k=" + idx(k), [&] {
      return compare(cut(j[k + 1].derivative().scaled(Rational(k, k + 1))), cut(j[k].q_derivative()));
    });
  }
  report.run("J_2^. = J_3 - J_1 J_2 + E_2 J_1 / 6", [&] {
    return compare(cut(j[2].derivative()),
                   cut(j[3] - j[1] * j[2] + j[1].times_qexp(e2).scaled(Rational(1, 6))));
  });
  report.run("J_3^. = J_4 - J_3 J_1 + E_2 J_2 / 4 - E_4 / 120", [&] {
    return compare(cut(j[3].derivative()), cut(j[4] - j[3] * j[1] + j[2].times_qexp(e2).scaled(Rational(1, 4)) -
                                               constant_w(e4.scaled(Rational(1, 120)))));
  });
  Lazy<WLaurent> k2([&] { return completion_from_j(j, 2); });
  Lazy<WLaurent> k4([&] { return completion_from_j(j, 4); });
  report.run("K_2 = J_1^. - E_2 / 12", [&] {
    return compare(cut(k2.get()), cut(j[1].derivative() - constant_w(e2.scaled(Rational(1, 12)))));
  });
  report.run("K_2 = -wp", [&] { return compare(cut(k2.get()), cut(-ctx.wp)); });
  report.run("K_2 K_2 = -K_4 / 3 + E_4 / 60", [&] {
    return compare(cut(k2.get() * k2.get()),
                   cut(k4.get().scaled(Rational(-1, 3)) + constant_w(e4.scaled(Rational(1, 60)))));
  });
  for (long n = 2; n <= std::min<long>(cfg.nmax, static_cast<long>(j.size()) - 1); ++n) {
    report.run("J_" + idx(n) + " at z = 0", [&, n] {
      const QExp expected = n % 2 == 0 ? eisenstein(n, t).scaled(bernoulli(n)) : QExp::zero(t);
      return compare(eval_w0(j[n]), expected);
    });
  }
  for (long n = 0; n <= std::min<long>(cfg.nmax, static_cast<long>(j.size()) - 1); ++n) {
    report.run("J_" + idx(n) + " parity", [&, n] {
      return compare(j[n].substitute_w(Rational(-1)), j[n].scaled(sign_pow(n)));
    });
  }
  for (long n = 2; n <= 3; ++n) {
    report.run("J_" + idx(n) + "(z + tau) expansion", [&, n] {
      PQSeries rhs;
      for (long k = 0; k <= n; ++k)
        rhs += substitute_elliptic(ctx.j_fourier[k], 0).scaled(sign_pow(n + k) * Rational(binomial(n, k)));
      return compare(substitute_elliptic(ctx.j_fourier[n], 1), rhs);
    });
    report.run("J_" + idx(n) + " unchanged by the zero shift", [&, n] {
      return compare(substitute_elliptic(ctx.j_fourier[n], 0), ctx.j_fourier[n]);
    });
    report.run("Fourier and w forms of J_" + idx(n) + " agree", [&, n] {
      return compare(fourier_to_w(ctx.j_fourier[n], cfg.wtrunc), cut(j[n]));
    });
  }
  return report;
}

// --------------------------------------------------------------- kstructure

// Modular fits up to weight 10 need this many integer q-orders.
constexpr GridExp kMinFitOrder = 8;

KStructureContext make_kstructure_context(const SuiteConfig& config) {
  KStructureContext ctx;
  ctx.config = config;
  const long w = std::max(config.wtrunc, 5L) + 4;
  const GridExp t = std::max<GridExp>(config.qtrunc, kMinFitOrder * QExp::kGrid);
  for (long n = 2; n <= 6; ++n) {
    ctx.k.emplace(n, completion_K_explicit(n, w, t));
    ctx.k_recursive.emplace(n, completion_K_recursive(n, w, t));
  }
  return ctx;
}

Report run_kstructure_checks(const KStructureContext& ctx) {
  Report report("kstructure");
  const GridExp t = ctx.k.at(2).qtrunc();
  for (const auto& [n, k] : ctx.k) {
    const std::string name = "K_" + idx(n);
    report.run(name + " explicit and recursive forms agree", [&, n = n] { return compare(k, ctx.k_recursive.at(n)); });
    report.run(name + " leading coefficient", [&, n = n] {
      return compare(k.coeff(-n), QExp::constant(sign_pow(n + 1) * Rational(n - 1), t));
    });
    report.run(name + " has no residue", [&] { return zero_check(k.coeff(-1)); });
    report.run(name + " vanishes below its gap", [&, n = n]() -> std::optional<FailureLocation> {
      for (long e = -n + 1; e <= -n + 3; ++e) {
        if (auto f = zero_check(k.coeff(e))) {
          f->w = e;
          return f;
        }
      }
      return std::nullopt;
    });
    report.run(name + " Laurent coefficients are modular", [&, n = n]() -> std::optional<FailureLocation> {
      for (long e = -n; e <= 4; ++e) {
        const ModularFit fit = express_in_modular_basis(k.coeff(e), e + n);
        if (!fit.consistent)
          return FailureLocation{Rational(fit.first_mismatch.value_or(0)), std::nullopt, e,
                                 "not modular of weight " + idx(e + n)};
      }
      return std::nullopt;
    });
  }
  report.run("K_4 constant term is a multiple of E_4", [&]() -> std::optional<FailureLocation> {
    const ModularFit fit = express_in_modular_basis(ctx.k.at(4).coeff(0), 4);
    if (!fit.consistent) return FailureLocation{Rational(fit.first_mismatch.value_or(0)), std::nullopt, 0, {}};
    if (fit.terms.size() != 1 || fit.terms[0].e4_power != 1) return fail_with("unexpected weight-4 basis");
    return std::nullopt;
  });
  const auto closure = [&](const std::string& name, const VElement& f) {
    report.run(name + " lies in the K-basis span", [&, f]() -> std::optional<FailureLocation> {
      const KDecomposition d = decompose_in_k_basis(f);
      if (d.residual) return FailureLocation{d.residual->n, std::nullopt, d.residual->w, "remainder is not constant"};
      for (std::size_t i = 0; i < d.fits.size(); ++i)
        if (!d.fits[i].consistent)
          return FailureLocation{Rational(d.fits[i].first_mismatch.value_or(0)), std::nullopt, std::nullopt,
                                 "coefficient " + idx(static_cast<long>(i)) + " is not modular"};
      return std::nullopt;
    });
  };
  const auto& k = ctx.k;
  closure("K_2 K_2", VElement{k.at(2) * k.at(2), 4, 4});
  closure("K_2 K_3", VElement{k.at(2) * k.at(3), 5, 5});
  closure("K_3 K_3", VElement{k.at(3) * k.at(3), 6, 6});
  closure("K_2^.", VElement{k.at(2).derivative(), 3, 3});
  closure("K_3^.", VElement{k.at(3).derivative(), 4, 4});
  closure("K_4^.", VElement{k.at(4).derivative(), 5, 5});
  return report;
}

// ---------------------------------------------------------------- ramanujan

RamanujanContext make_ramanujan_context(const SuiteConfig& config) {
  const GridExp t = config.qtrunc;
  return RamanujanContext{config,
                          e21(t),
                          eisenstein_jacobi(4, t),
                          eisenstein_jacobi(6, t),
                          phi_form(WeakKind::minus2, t),
                          phi_form(WeakKind::zero, t)};
}

Report run_ramanujan_checks(const RamanujanContext& ctx) {
  Report report("ramanujan");
  const GridExp t = ctx.config.qtrunc;
  const QExp e2 = eisenstein(2, t);
  const QExp e4 = eisenstein(4, t);
  const QExp e6 = eisenstein(6, t);

  // Index-1 equations, each as lhs = rhs.
  Lazy<PQSeries> lhs2([&] {
    return jacobi_serre_explicit(ctx.e21, 2).fourier + ctx.e21.fourier.times_qexp(e2.scaled(Rational(1, 12))) +
           ctx.phi_m2.fourier.times_qexp(e4.derivative().scaled(Rational(1, 16)));
  });
  Lazy<PQSeries> lhs4([&] { return jacobi_serre_explicit(ctx.e41, ctx.e41.weight).fourier; });
  Lazy<PQSeries> lhs6([&] { return jacobi_serre_explicit(ctx.e61, ctx.e61.weight).fourier; });
  const PQSeries rhs2 = ctx.e41.fourier.scaled(Rational(-1, 12));
  const PQSeries rhs4 = ctx.e61.fourier.scaled(Rational(-1, 3));
  const PQSeries rhs6 = ctx.e41.fourier.times_qexp(e4.scaled(Rational(-1, 2)));

  report.run("dJ E_{2,1} + E_2 E_{2,1} / 12 + E_4' phi_{-2,1} / 16 = -E_{4,1} / 12",
             [&] { return compare(lhs2.get(), rhs2); });
  report.run("dJ E_{4,1} = -E_{6,1} / 3", [&] { return compare(lhs4.get(), rhs4); });
  report.run("dJ E_{6,1} = -E_4 E_{4,1} / 2", [&] { return compare(lhs6.get(), rhs6); });

  const GridExp tc = std::max<GridExp>(t, (ctx.config.classical_order + 1) * QExp::kGrid);
  const QExp c2 = eisenstein(2, tc), c4 = eisenstein(4, tc), c6 = eisenstein(6, tc);
  report.run("dS E_2 + E_2^2 / 12 = -E_4 / 12", [&] {
    return compare(serre_modular(c2, 2) + (c2 * c2).scaled(Rational(1, 12)), c4.scaled(Rational(-1, 12)));
  });
  report.run("dS E_4 = -E_6 / 3", [&] { return compare(serre_modular(c4, 4), c6.scaled(Rational(-1, 3))); });
  report.run("dS E_6 = -E_4^2 / 2", [&] { return compare(serre_modular(c6, 6), (c4 * c4).scaled(Rational(-1, 2))); });

  report.run("E_{2,1} equation at z = 0", [&] {
    return first_of({[&] { return compare(restrict_z0(lhs2.get()), serre_modular(e2, 2) + (e2 * e2).scaled(Rational(1, 12))); },
                     [&] { return compare(restrict_z0(rhs2), e4.scaled(Rational(-1, 12))); }});
  });
  report.run("E_{4,1} equation at z = 0", [&] {
    return first_of({[&] { return compare(restrict_z0(lhs4.get()), serre_modular(e4, 4)); },
                     [&] { return compare(restrict_z0(rhs4), e6.scaled(Rational(-1, 3))); }});
  });
  report.run("E_{6,1} equation at z = 0", [&] {
    return first_of({[&] { return compare(restrict_z0(lhs6.get()), serre_modular(e6, 6)); },
                     [&] { return compare(restrict_z0(rhs6), (e4 * e4).scaled(Rational(-1, 2))); }});
  });

  report.run("E_{2,1} at z = 0 is E_2", [&] { return compare(restrict_z0(ctx.e21.fourier), e2); });
  report.run("E_{4,1} at z = 0 is E_4", [&] { return compare(restrict_z0(ctx.e41.fourier), e4); });
  report.run("E_{6,1} at z = 0 is E_6", [&] { return compare(restrict_z0(ctx.e61.fourier), e6); });

  const std::vector<std::pair<std::string, const JacobiForm*>> even{
      {"phi_{-2,1}", &ctx.phi_m2}, {"phi_{0,1}", &ctx.phi_0}, {"E_{4,1}", &ctx.e41}, {"E_{6,1}", &ctx.e61}};
  for (const auto& [name, f] : even) {
    report.run("dJ " + name + " explicit = (T_tau - D_H) / (1 - 4m)", [&, f = f] {
      return compare(jacobi_serre_explicit(*f, f->weight).fourier, jacobi_serre_conjugated(*f).fourier);
    });
    report.run("T_tau " + name + " at z = 0", [&, f = f] {
      return compare(restrict_z0(t_tau_conjugated(*f).fourier), t_tau_restriction(*f));
    });
  }

  const auto restriction_law = [&](const std::string& name, const JacobiForm& f) {
    report.run("dJ commutes with z = 0 on " + name, [&, f] {
      return compare(restrict_z0(jacobi_serre_explicit(f, f.weight).fourier),
                     serre_modular(restrict_z0(f.fourier), f.weight));
    });
  };
  restriction_law("E_{4,1}", ctx.e41);
  restriction_law("E_{6,1}", ctx.e61);
  Lazy<JacobiForm> heat4([&] { return heat_operator(ctx.e41); });
  Lazy<JacobiForm> ttau4([&] { return t_tau_operator(ctx.e41); });
  report.run("dJ commutes with z = 0 on D_H E_{4,1}", [&] {
    const JacobiForm& f = heat4.get();
    return compare(restrict_z0(jacobi_serre_explicit(f, f.weight).fourier),
                   serre_modular(restrict_z0(f.fourier), f.weight));
  });
  report.run("dJ commutes with z = 0 on T_tau E_{4,1}", [&] {
    const JacobiForm& f = ttau4.get();
    return compare(restrict_z0(jacobi_serre_explicit(f, f.weight).fourier),
                   serre_modular(restrict_z0(f.fourier), f.weight));
  });
  const auto is_jacobi = [&](const std::string& name, const std::function<JacobiForm()>& make) {
    report.run(name + " is a Jacobi form", [&, make]() -> std::optional<FailureLocation> {
      const JacobiForm f = make();
      const auto bad = singular_coefficient_check(f.fourier, f.index, support_mode(f.kind));
      if (!bad.empty()) return FailureLocation{bad.front().n, bad.front().r, std::nullopt, "outside the support bound"};
      return compare(substitute_elliptic(f.fourier, 1).times_monomial(Rational(1), 4, QExp::kGrid),
                     substitute_elliptic(f.fourier, 0));
    });
  };
  is_jacobi("D_H E_{4,1}", [&] { return heat4.get(); });
  is_jacobi("T_tau E_{4,1}", [&] { return ttau4.get(); });
  is_jacobi("D_H phi_{-2,1}", [&] { return heat_operator(ctx.phi_m2); });
  is_jacobi("dJ E_{6,1}", [&] { return jacobi_serre(ctx.e61); });

  report.run("F / phi_{-2,1} times phi_{-2,1} is F", [&] {
    const long w = default_w_trunc(t, 1);
    const WLaurent f = fourier_to_w(ctx.e41.fourier, w + 4);
    const WLaurent phi = fourier_to_w(ctx.phi_m2.fourier, w + 8);
    return compare(((f / phi) * phi).truncated(w, t), f.truncated(w, t));
  });
  return report;
}

// -------------------------------------------------------------------- theta

ThetaContext make_theta_context(const SuiteConfig& config) {
  ThetaContext ctx;
  ctx.config = config;
  const GridExp t = config.qtrunc;
  ctx.theta.push_back(PQSeries{});
  for (int i = 1; i <= 4; ++i) ctx.theta.push_back(theta(ThetaIndex(i), t + kThetaPad));
  const long w = config.wtrunc + 8;
  for (long n = 0; n <= config.nmax; ++n) ctx.j.push_back(deformed_eisenstein_w(n, w, t));
  for (int i = 2; i <= 4; ++i)
    for (long n = 1; n <= config.variant_nmax; ++n) ctx.variant[i].emplace(n, theta_variant_concrete(i, n, w, t));
  return ctx;
}

Report run_theta_checks(const ThetaContext& ctx) {
  Report report("theta");
  const SuiteConfig& cfg = ctx.config;
  const GridExp t = cfg.qtrunc;
  const long wt = cfg.wtrunc;
  const long kmax = 4;
  const PQSeries& th = ctx.theta[1];
  const QExp e2 = eisenstein(2, t);
  Lazy<ThetaInverseData> data([&] { return theta_inverse_data(th, 2 * kmax, t); });
  Lazy<std::vector<QExp>> p_rec([&] { return theta_p_recursion(kmax, t); });
  Lazy<std::vector<QExp>> odd([&] { return theta_odd_derivatives_at_zero(th, kmax, t); });

  report.run("h_0 = 1", [&] { return compare(data.get().h[0], QExp::constant(Rational(1), t)); });
  report.run("odd h_n vanish", [&]() -> std::optional<FailureLocation> {
    for (std::size_t n = 1; n < data.get().h.size(); n += 2)
      if (auto f = zero_check(data.get().h[n])) return f;
    return std::nullopt;
  });
  report.run("P_1 = E_2 / 8", [&] { return compare(data.get().P[1], e2.scaled(Rational(1, 8))); });

  for (long n = 0; n <= cfg.nmax; ++n) {
    report.run("F_" + idx(n) + " = J_" + idx(n), [&, n] {
      return compare(f_n(th, th, n, wt, t), ctx.j[n].truncated(wt, t));
    });
  }
  for (const auto& [i, row] : ctx.variant) {
    for (const auto& [n, jin] : row) {
      const std::string name = "J_{" + std::to_string(i) + "," + idx(n) + "}";
      report.run("F_{" + std::to_string(i) + "," + idx(n) + "} = " + name, [&, i = i, n = n, &jin = jin] {
        return compare(f_n(th, ctx.theta[i], n, wt, t), jin.truncated(wt, t));
      });
      report.run(name + " closed form matches its definition", [&, i = i, n = n, &jin = jin] {
        return compare(theta_variant_definition(i, n, wt, t), jin.truncated(wt, t));
      });
    }
  }

  // J_n theta_1 against derivatives of theta_1, kept free of division.
  Lazy<WLaurent> tw([&] { return fourier_to_w(th, wt + 8); });
  const auto d = [&](long k) {
    WLaurent r = tw.get();
    for (long i = 0; i < k; ++i) r = r.derivative();
    return r;
  };
  const auto cut = [&](const WLaurent& a) { return a.truncated(wt, t); };
  report.run("J_2 theta_1 = theta_1^.. - E_2 theta_1 / 12", [&] {
    return compare(cut(ctx.j[2] * tw.get()), cut(d(2) - tw.get().times_qexp(e2.scaled(Rational(1, 12)))));
  });
  report.run("J_3 theta_1 = theta_1^... - E_2 theta_1^. / 4", [&] {
    return compare(cut(ctx.j[3] * tw.get()), cut(d(3) - d(1).times_qexp(e2.scaled(Rational(1, 4)))));
  });
  report.run("J_4 theta_1 = theta_1^(4.) - E_2 theta_1^.. / 2 + (7 E_2^2 / 240 - E_2' / 10) theta_1", [&] {
    const QExp c = (e2 * e2).scaled(Rational(7, 240)) - e2.derivative().scaled(Rational(1, 10));
    return compare(cut(ctx.j[4] * tw.get()),
                   cut(d(4) - d(2).times_qexp(e2.scaled(Rational(1, 2))) + tw.get().times_qexp(c)));
  });

  report.run("even ratios at 0 = odd derivatives / theta_1^.(0)", [&]() -> std::optional<FailureLocation> {
    const auto even = theta_even_ratios_at_zero(th, kmax, t);
    const QExp ginv = odd.get()[0].inverse();
    for (long k = 0; k <= kmax; ++k)
      if (auto f = compare(even[k], QExp::multiply(odd.get()[k], ginv, t))) return f;
    return std::nullopt;
  });
  report.run("even ratios at 0 = 2^k P_k", [&]() -> std::optional<FailureLocation> {
    const auto even = theta_even_ratios_at_zero(th, kmax, t);
    for (long k = 0; k <= kmax; ++k)
      if (auto f = compare(even[k], p_rec.get()[k].scaled(Rational(2).pow(k)))) return f;
    return std::nullopt;
  });
  report.run("P_k from tau-derivatives of theta_1", [&]() -> std::optional<FailureLocation> {
    const auto tau = theta_tau_ratios_at_zero(th, kmax, t);
    for (long k = 0; k <= kmax; ++k)
      if (auto f = compare(tau[k], p_rec.get()[k])) return f;
    return std::nullopt;
  });
  report.run("h_tilde annihilates the odd derivatives", [&]() -> std::optional<FailureLocation> {
    const auto& ht = data.get().h_tilde;
    for (long m = 1; m <= kmax; ++m) {
      QExp sum = QExp::zero(t);
      for (long k = 0; k <= m; ++k)
        sum += QExp::multiply(ht[2 * (m - k)], odd.get()[k], t).scaled(Rational(1) / Rational(factorial(2 * k + 1)));
      if (auto f = zero_check(sum)) return f;
    }
    return std::nullopt;
  });
  report.run("h by recursion", [&]() -> std::optional<FailureLocation> {
    const auto rec = h_by_recursion(2 * kmax, p_rec.get());
    for (long n = 0; n <= 2 * kmax; ++n)
      if (auto f = compare(rec[n], data.get().h[n])) return f;
    return std::nullopt;
  });
  report.run("Eisenstein series from h", [&]() -> std::optional<FailureLocation> {
    const auto& h = data.get().h;
    for (long m = 1; m <= kmax; ++m) {
      QExp sum = QExp::zero(t);
      for (long k = 0; k <= m; ++k)
        sum += (h[2 * m - 2 * k] * p_rec.get()[k]).scaled(Rational(binomial(2 * m, 2 * k)) * Rational(2).pow(k));
      if (auto f = compare(sum, eisenstein(2 * m, t).scaled(bernoulli(2 * m)))) return f;
    }
    return std::nullopt;
  });
  report.run("theta-derived data is invariant under scaling theta_1", [&]() -> std::optional<FailureLocation> {
    const PQSeries scaled = th.scaled(Rational(-5, 7));
    const ThetaInverseData s = theta_inverse_data(scaled, 2 * kmax, t);
    return first_of({[&] { return compare(s.h[2 * kmax], data.get().h[2 * kmax]); },
                     [&] { return compare(s.P[kmax], data.get().P[kmax]); },
                     [&] { return compare(f_n(scaled, scaled, 3, wt, t), f_n(th, th, 3, wt, t)); },
                     [&] { return compare(phi_from_theta(scaled, t), phi_from_theta(th, t)); },
                     [&] { return compare(theta_even_ratios_at_zero(scaled, kmax, t)[kmax],
                                          theta_even_ratios_at_zero(th, kmax, t)[kmax]); }});
  });
  return report;
}

// ------------------------------------------------------------------- shifts

ShiftsContext make_shifts_context(const SuiteConfig& config) {
  ShiftsContext ctx;
  ctx.config = config;
  const GridExp t = config.qtrunc;
  ctx.j_fourier.push_back(PQSeries::from_qexp(QExp::constant(Rational(1), t)));
  for (long n = 1; n <= config.variant_nmax; ++n)
    ctx.j_fourier.push_back(deformed_eisenstein_fourier(n, t, config.window));
  for (int i = 2; i <= 4; ++i)
    for (long n = 1; n <= config.variant_nmax; ++n)
      ctx.variant_fourier[i].emplace(n, theta_variant_fourier(i, n, t, config.window));
  return ctx;
}

Report run_shifts_checks(const ShiftsContext& ctx) {
  Report report("shifts");
  const char* shift[] = {"", "", "z + 1/2", "z + 1/2 + tau/2", "z + tau/2"};
  for (const auto& [i, row] : ctx.variant_fourier) {
    for (const auto& [n, jin] : row) {
      report.run("J_{" + std::to_string(i) + "," + idx(n) + "} from J at " + shift[i], [&, i = i, n = n, &jin = jin] {
        return compare(shifted_combination(i, n, ctx.j_fourier), jin);
      });
    }
  }
  report.run("zero shift is the identity", [&]() -> std::optional<FailureLocation> {
    for (const PQSeries& j : ctx.j_fourier)
      if (auto f = compare(substitute_p(j, Rational(0), false), j)) return f;
    return std::nullopt;
  });
  return report;
}

// ---------------------------------------------------------------- corollary

CorollaryContext make_corollary_context(const SuiteConfig& config) {
  CorollaryContext ctx;
  ctx.config = config;
  ctx.theta1 = theta(ThetaIndex(1), config.qtrunc);
  const long w = config.wtrunc + 8;
  for (long k = 0; k <= 4; ++k) ctx.j.push_back(deformed_eisenstein_w(k, w, config.qtrunc));
  return ctx;
}

Report run_corollary_checks(const CorollaryContext& ctx) {
  Report report("corollary");
  report.run("fourth-order theta_1 relation", [&] { return zero_check(theta_corollary_residual(ctx.theta1)); });
  report.run("each term of the theta_1 relation is nonzero", [&]() -> std::optional<FailureLocation> {
    const auto terms = theta_corollary_terms(ctx.theta1);
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (terms[i].is_zero()) return fail_with("term " + std::to_string(i) + " vanishes");
    return std::nullopt;
  });
  const long wt = ctx.config.wtrunc;
  const GridExp t = ctx.config.qtrunc;
  for (long k = 1; k + 1 < static_cast<long>(ctx.j.size()); ++k) {
    report.run("generating derivative relation k=" + idx(k), [&, k] {
      return compare(ctx.j[k + 1].derivative().scaled(Rational(k, k + 1)).truncated(wt, t),
                     ctx.j[k].q_derivative().truncated(wt, t));
    });
  }
  return report;
}

// ----------------------------------------------------------------- elliptic

EllipticContext make_elliptic_context(const SuiteConfig& config) {
  const GridExp t = config.qtrunc;
  EllipticContext ctx;
  ctx.config = config;
  ctx.forms = {{"phi_{-2,1}", phi_form(WeakKind::minus2, t)},
               {"phi_{0,1}", phi_form(WeakKind::zero, t)},
               {"E_{4,1}", eisenstein_jacobi(4, t)},
               {"E_{6,1}", eisenstein_jacobi(6, t)},
               {"E_{2,1}", e21(t)}};
  ctx.theta1 = theta(ThetaIndex(1), t);
  return ctx;
}

Report run_elliptic_checks(const EllipticContext& ctx) {
  Report report("elliptic");
  for (const auto& [name, f] : ctx.forms) {
    report.run(name + " elliptic law", [&f = f] {
      const long m = f.index;
      return compare(substitute_elliptic(f.fourier, 1).times_monomial(Rational(1), 4 * m, m * QExp::kGrid),
                     substitute_elliptic(f.fourier, 0));
    });
    report.run(name + " is even in z", [&f = f] { return compare(reflect_p(f.fourier), f.fourier); });
    report.run(name + " support bound", [&f = f]() -> std::optional<FailureLocation> {
      const auto bad = singular_coefficient_check(f.fourier, f.index, support_mode(f.kind));
      if (bad.empty()) return std::nullopt;
      return FailureLocation{bad.front().n, bad.front().r, std::nullopt, "outside the support bound"};
    });
  }
  const PQSeries& th = ctx.theta1;
  report.run("theta_1 quasi-periodicity", [&] {
    return compare(substitute_elliptic(th, 1), th.times_monomial(Rational(-1), -2, -QExp::kGrid / 2));
  });
  report.run("theta_1 is odd in z", [&] { return compare(reflect_p(th), -th); });
  for (const auto& [name, f] : ctx.forms) {
    if (name == "phi_{-2,1}")
      report.run("phi_{-2,1} vanishes at z = 0", [&f = f] { return zero_check(restrict_z0(f.fourier)); });
    if (name == "phi_{0,1}")
      report.run("phi_{0,1} at z = 0 is 12", [&f = f] {
        return compare(restrict_z0(f.fourier), QExp::constant(Rational(12), f.fourier.q_trunc()));
      });
  }
  return report;
}

// ------------------------------------------------------------------- driver

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "kstructure", "ramanujan", "theta",
                                              "shifts",    "corollary",  "elliptic",  "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "relations") return run_relations_checks(make_relations_context(config));
  if (name == "kstructure") return run_kstructure_checks(make_kstructure_context(config));
  if (name == "ramanujan") return run_ramanujan_checks(make_ramanujan_context(config));
  if (name == "theta") return run_theta_checks(make_theta_context(config));
  if (name == "shifts") return run_shifts_checks(make_shifts_context(config));
  if (name == "corollary") return run_corollary_checks(make_corollary_context(config));
  if (name == "elliptic") return run_elliptic_checks(make_elliptic_context(config));
  if (name == "all") {
    Report all("all");
    for (const std::string& s : suite_names()) {
      if (s == "all") continue;
      const Report part = run_suite(s, config);
      for (CheckResult c : part.checks()) {
        c.check = s + ": " + c.check;
        all.add(std::move(c));
      }
    }
    return all;
  }
  throw DomainError("unknown suite '" + name + "'");
}

std::vector<std::vector<Rational>> fourier_table(const PQSeries& f, long nmax, long rmax) {
  std::vector<std::vector<Rational>> rows;
  for (long n = 0; n <= nmax; ++n) {
    std::vector<Rational> row;
    for (long r = -rmax; r <= rmax; ++r) row.push_back(f.coeff(n * QExp::kGrid, 2 * r));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace jacobi
