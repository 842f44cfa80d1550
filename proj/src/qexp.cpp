#include "jacobi/qexp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "jacobi/errors.hpp"
#include "jacobi/linear_solve.hpp"

namespace jacobi {

namespace {

// Common stride of the exponents of `terms` relative to the first one.
long exponent_stride(const std::vector<QExp::Term>& terms, long acc) {
  if (terms.empty()) return acc;
  const GridExp base = terms.front().first;
  for (const auto& [e, c] : terms) acc = std::gcd(acc, e - base);
  return acc;
}

}  // namespace

QExp QExp::zero(GridExp trunc) {
  QExp r;
  r.trunc_ = trunc;
  return r;
}

QExp QExp::constant(const Rational& c, GridExp trunc) { return monomial(c, 0, trunc); }

QExp QExp::monomial(const Rational& c, GridExp exponent, GridExp trunc) {
  QExp r = zero(trunc);
  if (!c.is_zero() && exponent < trunc) r.terms_.emplace_back(exponent, c);
  return r;
}

QExp QExp::from_terms(std::vector<Term> terms, GridExp trunc) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  QExp r = zero(trunc);
  for (auto& [e, c] : terms) {
    if (e >= trunc) break;
    if (!r.terms_.empty() && r.terms_.back().first == e) {
      r.terms_.back().second += c;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!c.is_zero()) {
      r.terms_.emplace_back(e, std::move(c));
    }
  }
  return r;
}

GridExp QExp::valuation() const { return terms_.empty() ? trunc_ : terms_.front().first; }

Rational QExp::coeff(GridExp e) const {
  if (e >= trunc_) throw InsufficientData("coefficient " + q_power_str(e) + " lies beyond the truncation");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, GridExp x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Rational(0);
}

const Rational& QExp::leading() const {
  if (terms_.empty()) throw DivisionError("series has no known nonzero coefficient");
  return terms_.front().second;
}

QExp QExp::truncated(GridExp t) const {
  if (t >= trunc_) return *this;
  QExp r = zero(t);
  for (const auto& term : terms_) {
    if (term.first >= t) break;
    r.terms_.push_back(term);
  }
  return r;
}

QExp QExp::shifted(GridExp s) const {
  QExp r = *this;
  for (auto& term : r.terms_) term.first += s;
  r.trunc_ = trunc_add(trunc_, s);
  return r;
}

QExp QExp::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(trunc_);
  QExp r = *this;
  for (auto& term : r.terms_) term.second *= c;
  return r;
}

QExp QExp::multiply(const QExp& a, const QExp& b, GridExp limit) {
  const GridExp va = a.valuation();
  const GridExp vb = b.valuation();
  GridExp t = std::min({trunc_add(a.trunc_, vb), trunc_add(b.trunc_, va), limit});
  if (a.terms_.empty() || b.terms_.empty()) return zero(t);

  long stride = exponent_stride(b.terms_, exponent_stride(a.terms_, 0));
  if (stride == 0) stride = 1;
  const GridExp base = va + vb;
  GridExp top = a.terms_.back().first + b.terms_.back().first + 1;
  if (t < kExact) top = std::min(top, t);
  if (top <= base) return zero(t);
  std::vector<mpq_class> acc(static_cast<std::size_t>((top - base + stride - 1) / stride));
  mpq_class prod;
  for (const auto& [ea, ca] : a.terms_) {
    if (ea + vb >= top) break;
    for (const auto& [eb, cb] : b.terms_) {
      const GridExp e = ea + eb;
      if (e >= top) break;
      mpq_mul(prod.get_mpq_t(), ca.raw().get_mpq_t(), cb.raw().get_mpq_t());
      acc[static_cast<std::size_t>((e - base) / stride)] += prod;
    }
  }
  QExp r = zero(t);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (sgn(acc[i]) != 0)
      r.terms_.emplace_back(base + static_cast<GridExp>(i) * stride, Rational(std::move(acc[i])));
  }
  return r;
}

QExp QExp::inverse() const {
  if (terms_.empty()) throw DivisionError("inverse of a series that is zero within its truncation");
  const GridExp v = terms_.front().first;
  const Rational lead_inv = terms_.front().second.inverse();
  if (terms_.size() == 1 && is_exact()) return monomial(lead_inv, -v, kExact);
  if (is_exact()) throw DivisionError("inverse of an exact non-monomial needs a finite truncation");

  // u = this / (lead q^v) = 1 + sum u_d q^d; invert on the stride lattice.
  long stride = exponent_stride(terms_, 0);
  if (stride == 0) stride = 1;
  const GridExp rel = trunc_ - v;  // relative precision
  const std::size_t count = static_cast<std::size_t>((rel + stride - 1) / stride);
  std::vector<mpq_class> u(count), s(count);
  for (const auto& [e, c] : terms_) {
    std::size_t i = static_cast<std::size_t>((e - v) / stride);
    if (i < count) u[i] = (c * lead_inv).raw();
  }
  s[0] = 1;
  mpq_class prod;
  for (std::size_t k = 1; k < count; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(u[j]) == 0 || sgn(s[k - j]) == 0) continue;
      mpq_mul(prod.get_mpq_t(), u[j].get_mpq_t(), s[k - j].get_mpq_t());
      acc += prod;
    }
    s[k] = -acc;
  }
  QExp r = zero(trunc_ - 2 * v);
  for (std::size_t k = 0; k < count; ++k) {
    if (sgn(s[k]) == 0) continue;
    r.terms_.emplace_back(-v + static_cast<GridExp>(k) * stride, Rational(std::move(s[k])) * lead_inv);
  }
  return r;
}

QExp QExp::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  QExp result = constant(Rational(1));
  QExp base = *this;
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

QExp QExp::derivative() const {
  QExp r = zero(trunc_);
  for (const auto& [e, c] : terms_)
    if (e != 0) r.terms_.emplace_back(e, c * Rational(e, kGrid));
  return r;
}

QExp QExp::substitute_q(const Rational& c) const {
  if (c.sign() <= 0) throw DomainError("q-substitution factor must be positive");
  QExp r = zero(kExact);
  for (const auto& [e, coef] : terms_) {
    Rational ne = c * Rational(e);
    if (!ne.is_integer())
      throw GridError("q-substitution moves " + q_power_str(e) + " off the 1/24 grid");
    r.terms_.emplace_back(ne.to_long(), coef);
  }
  if (!is_exact()) r.trunc_ = (c * Rational(trunc_)).ceil().to_long();
  return r;
}

QExp& QExp::operator+=(const QExp& o) {
  const GridExp t = std::min(trunc_, o.trunc_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      if (i->first < t) merged.push_back(std::move(*i));
      ++i;
    } else if (i == terms_.end() || j->first < i->first) {
      if (j->first < t) merged.push_back(*j);
      ++j;
    } else {
      Rational s = i->second + j->second;
      if (!s.is_zero() && i->first < t) merged.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  trunc_ = t;
  return *this;
}

QExp& QExp::operator-=(const QExp& o) { return *this += o.scaled(Rational(-1)); }

std::string q_power_str(GridExp e) {
  if (e == 0) return "";
  Rational r(e, QExp::kGrid);
  if (r == Rational(1)) return "q";
  if (r.is_integer()) return "q^" + r.str();
  return "q^(" + r.str() + ")";
}

std::string QExp::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::string qp = q_power_str(e);
    if (qp.empty()) {
      os << mag.str();
    } else {
      if (mag != Rational(1)) os << mag.str() << "*";
      os << qp;
    }
    first = false;
  }
  if (!is_exact()) {
    os << (first ? "" : " + ") << "O(" << (trunc_ == 0 ? std::string("1") : q_power_str(trunc_)) << ")";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

std::optional<GridExp> first_difference(const QExp& a, const QExp& b) {
  const GridExp t = std::min(a.trunc(), b.trunc());
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    GridExp e;
    if (j == b.terms().end() || (i != a.terms().end() && i->first < j->first)) {
      e = i->first;
      ++i;
    } else if (i == a.terms().end() || j->first < i->first) {
      e = j->first;
      ++j;
    } else {
      e = i->first;
      bool same = i->second == j->second;
      ++i;
      ++j;
      if (same) continue;
    }
    if (e >= t) return std::nullopt;
    return e;
  }
  return std::nullopt;
}

QExp eisenstein(long weight, GridExp trunc) {
  if (weight < 2 || weight % 2 != 0) throw DomainError("Eisenstein weight must be even and >= 2");
  const Rational factor = -Rational(2 * weight) / bernoulli(weight);
  std::vector<QExp::Term> terms;
  terms.emplace_back(0, Rational(1));
  for (long n = 1; QExp::integer(n) < trunc; ++n)
    terms.emplace_back(QExp::integer(n), factor * Rational(divisor_sigma(weight - 1, n)));
  return QExp::from_terms(std::move(terms), trunc);
}

QExp delta(GridExp trunc) {
  // Euler's pentagonal series for prod (1 - q^n).
  const GridExp inner = trunc - QExp::kGrid;
  if (inner <= 0) return QExp::zero(trunc);
  std::vector<QExp::Term> terms{{0, Rational(1)}};
  for (long k = 1; QExp::integer(k * (3 * k - 1) / 2) < inner; ++k) {
    const Rational sign(k % 2 == 0 ? 1 : -1);
    terms.emplace_back(QExp::integer(k * (3 * k - 1) / 2), sign);
    terms.emplace_back(QExp::integer(k * (3 * k + 1) / 2), sign);
  }
  QExp euler = QExp::from_terms(std::move(terms), inner);
  return euler.pow(24).shifted(QExp::kGrid);
}

ModularFit express_in_modular_basis(const QExp& f, long weight) {
  if (weight < 0) throw DomainError("modular weight must be nonnegative");
  if (f.is_exact()) throw InsufficientData("modular fit needs a truncated expansion");
  for (const auto& [e, c] : f.terms())
    if (e % QExp::kGrid != 0 || e < 0)
      throw DomainError("modular fit needs integer exponents and nonnegative valuation");

  std::vector<std::pair<long, long>> monomials;
  if (weight % 2 == 0)
    for (long a = weight / 4; a >= 0; --a)
      if ((weight - 4 * a) % 6 == 0) monomials.emplace_back(a, (weight - 4 * a) / 6);

  const long orders = (f.trunc() + QExp::kGrid - 1) / QExp::kGrid;
  if (orders < static_cast<long>(monomials.size()) + 3)
    throw InsufficientData("truncation too small to overdetermine the weight " +
                           std::to_string(weight) + " basis");

  const QExp e4 = eisenstein(4, f.trunc());
  const QExp e6 = eisenstein(6, f.trunc());
  std::vector<QExp> basis;
  for (auto [a, b] : monomials) basis.push_back(e4.pow(a) * e6.pow(b));

  IncrementalSolver solver(basis.size());
  ModularFit fit;
  for (long n = 0; n < orders; ++n) {
    std::vector<Rational> row;
    for (const QExp& g : basis) row.push_back(g.coeff(QExp::integer(n)));
    if (solver.add_row(std::move(row), f.coeff(QExp::integer(n))) ==
        IncrementalSolver::RowStatus::inconsistent) {
      fit.first_mismatch = n;
      return fit;
    }
  }
  std::vector<Rational> x = solver.solution();
  fit.consistent = true;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    fit.terms.push_back(BasisMonomial{monomials[i].first, monomials[i].second, x[i]});
  return fit;
}

}  // namespace jacobi
