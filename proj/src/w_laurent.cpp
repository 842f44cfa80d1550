#include "jacobi/w_laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "jacobi/errors.hpp"
#include "jacobi/linear_solve.hpp"

namespace jacobi {

namespace {

bool is_exact_zero(const WLaurent& a) {
  return a.is_zero() && a.wtrunc() >= kExact && a.qtrunc() >= kExact;
}

GridExp min_coeff_trunc(const std::map<long, QExp>& terms, GridExp start) {
  GridExp t = start;
  for (const auto& [k, c] : terms) t = std::min(t, c.trunc());
  return t;
}

}  // namespace

WLaurent WLaurent::zero(long wtrunc, GridExp qtrunc) {
  WLaurent r;
  r.wtrunc_ = wtrunc;
  r.qtrunc_ = qtrunc;
  return r;
}

WLaurent WLaurent::monomial(const QExp& c, long k) {
  WLaurent r;
  r.qtrunc_ = c.trunc();
  if (!c.is_zero()) r.terms_.emplace(k, c);
  return r;
}

WLaurent WLaurent::from_terms(std::map<long, QExp> terms, long wtrunc, GridExp qtrunc) {
  WLaurent r;
  r.terms_ = std::move(terms);
  r.wtrunc_ = wtrunc;
  r.qtrunc_ = qtrunc;
  r.normalize();
  return r;
}

void WLaurent::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first >= wtrunc_) {
      it = terms_.erase(it);
      continue;
    }
    it->second = it->second.truncated(qtrunc_);
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

long WLaurent::valuation() const { return terms_.empty() ? wtrunc_ : terms_.begin()->first; }

QExp WLaurent::coeff(long k) const {
  if (k >= wtrunc_) throw InsufficientData("w^" + std::to_string(k) + " lies beyond the w-truncation");
  auto it = terms_.find(k);
  return it == terms_.end() ? QExp::zero(qtrunc_) : it->second;
}

WLaurent WLaurent::truncated(long wtrunc, GridExp qtrunc) const {
  WLaurent r = *this;
  r.wtrunc_ = std::min(wtrunc_, wtrunc);
  r.qtrunc_ = std::min(qtrunc_, qtrunc);
  r.normalize();
  return r;
}

WLaurent WLaurent::scaled(const Rational& c) const {
  WLaurent r = *this;
  for (auto& [k, v] : r.terms_) v = v.scaled(c);
  r.normalize();
  return r;
}

WLaurent WLaurent::times_qexp(const QExp& f) const { return *this * monomial(f); }

WLaurent WLaurent::shifted(long k) const {
  WLaurent r;
  r.qtrunc_ = qtrunc_;
  r.wtrunc_ = trunc_add(wtrunc_, k);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

WLaurent WLaurent::derivative() const {
  WLaurent r;
  r.qtrunc_ = qtrunc_;
  r.wtrunc_ = wtrunc_ >= kExact ? kExact : wtrunc_ - 1;
  for (const auto& [k, c] : terms_)
    if (k != 0) r.terms_.emplace(k - 1, c.scaled(Rational(k)));
  r.normalize();
  return r;
}

WLaurent WLaurent::q_derivative() const {
  WLaurent r = *this;
  for (auto& [k, c] : r.terms_) c = c.derivative();
  r.normalize();
  return r;
}

WLaurent WLaurent::substitute_w(const Rational& c) const {
  if (c.is_zero()) throw DomainError("w -> 0 is not a substitution");
  WLaurent r = *this;
  for (auto& [k, v] : r.terms_) v = v.scaled(c.pow(k));
  return r;
}

WLaurent WLaurent::substitute_q(const Rational& c) const {
  WLaurent r;
  r.wtrunc_ = wtrunc_;
  r.qtrunc_ = qtrunc_;
  if (qtrunc_ < kExact) {
    Rational t = Rational(qtrunc_) * c;
    r.qtrunc_ = t.ceil().to_long();
  }
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v.substitute_q(c));
  r.normalize();
  return r;
}

WLaurent WLaurent::inverse() const {
  if (terms_.empty()) throw DivisionError("inverse of a w-series that is zero within its truncation");
  const long v = terms_.begin()->first;
  const QExp lead_inv = terms_.begin()->second.inverse();
  if (terms_.size() == 1 && wtrunc_ >= kExact) {
    WLaurent r = monomial(lead_inv, -v);
    return r;
  }
  if (wtrunc_ >= kExact) throw DivisionError("inverse of an exact w-polynomial needs a finite w-truncation");
  const long count = wtrunc_ - v;
  std::vector<QExp> b;
  b.reserve(static_cast<std::size_t>(count));
  b.push_back(lead_inv);
  for (long n = 1; n < count; ++n) {
    QExp s = QExp::zero(kExact);
    for (long k = 1; k <= n; ++k) s += coeff(v + k) * b[static_cast<std::size_t>(n - k)];
    b.push_back(-(lead_inv * s));
  }
  std::map<long, QExp> out;
  for (long n = 0; n < count; ++n) out.emplace(n - v, b[static_cast<std::size_t>(n)]);
  GridExp t = min_coeff_trunc(out, kExact);
  return from_terms(std::move(out), wtrunc_ - 2 * v, t);
}

WLaurent WLaurent::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  WLaurent r = monomial(QExp::constant(Rational(1)));
  for (long i = 0; i < n; ++i) r = r * *this;
  return r;
}

WLaurent& WLaurent::operator+=(const WLaurent& o) {
  if (is_exact_zero(o)) return *this;
  if (is_exact_zero(*this)) return *this = o;
  wtrunc_ = std::min(wtrunc_, o.wtrunc_);
  qtrunc_ = std::min(qtrunc_, o.qtrunc_);
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) it->second += c;
  }
  normalize();
  return *this;
}

WLaurent operator*(const WLaurent& a, const WLaurent& b) {
  if (is_exact_zero(a) || is_exact_zero(b)) return WLaurent();
  const long w = std::min(trunc_add(a.wtrunc_, b.valuation()), trunc_add(b.wtrunc_, a.valuation()));
  GridExp t = trunc_add(a.qtrunc_, b.qtrunc_);
  for (const auto& [k, c] : a.terms_) t = std::min(t, trunc_add(b.qtrunc_, c.valuation()));
  for (const auto& [k, c] : b.terms_) t = std::min(t, trunc_add(a.qtrunc_, c.valuation()));
  std::map<long, QExp> out;
  for (const auto& [i, ca] : a.terms_) {
    for (const auto& [j, cb] : b.terms_) {
      if (i + j >= w) break;
      QExp prod = QExp::multiply(ca, cb, t);
      auto [it, inserted] = out.try_emplace(i + j, prod);
      if (!inserted) it->second += prod;
    }
  }
  return WLaurent::from_terms(std::move(out), w, t);
}

std::string WLaurent::str() const {
  std::ostringstream os;
  for (const auto& [k, c] : terms_) os << "w^" << k << ": " << c.str() << "\n";
  if (wtrunc_ < kExact) os << "O(w^" << wtrunc_ << ")\n";
  return os.str();
}

std::optional<WPoint> first_difference(const WLaurent& a, const WLaurent& b) {
  const long w = std::min(a.wtrunc(), b.wtrunc());
  std::set<long> keys;
  for (const auto& [k, c] : a.terms()) keys.insert(k);
  for (const auto& [k, c] : b.terms()) keys.insert(k);
  for (long k : keys) {
    if (k >= w) break;
    if (auto d = first_difference(a.coeff(k), b.coeff(k))) return WPoint{k, Rational(*d, QExp::kGrid)};
  }
  return std::nullopt;
}

WLaurent w_exp(const WLaurent& a) {
  if (a.is_zero()) return WLaurent::from_terms({{0, QExp::constant(Rational(1))}}, a.wtrunc(), a.qtrunc());
  if (a.valuation() < 1) throw DomainError("exp needs a series without constant term or principal part");
  if (a.wtrunc() >= kExact) throw DomainError("exp of an exact w-polynomial needs a finite w-truncation");
  const long w = a.wtrunc();
  std::vector<QExp> e;
  e.push_back(QExp::constant(Rational(1)));
  for (long n = 1; n < w; ++n) {
    QExp s = QExp::zero(kExact);
    for (long k = 1; k <= n; ++k) s += a.coeff(k).scaled(Rational(k)) * e[static_cast<std::size_t>(n - k)];
    e.push_back(s.scaled(Rational(1, n)));
  }
  std::map<long, QExp> out;
  for (long n = 0; n < w; ++n) out.emplace(n, e[static_cast<std::size_t>(n)]);
  GridExp t = min_coeff_trunc(out, a.qtrunc());
  return WLaurent::from_terms(std::move(out), w, t);
}

WLaurent fourier_to_w(const PQSeries& a, long wtrunc) {
  if (a.window()) throw WindowError("conversion to w needs the full p-support");
  if (a.shear() != 0) throw DomainError("conversion to w needs an unsheared expansion");
  std::map<long, QExp> out;
  for (long j = 0; j < wtrunc; ++j) {
    const Rational inv_fact(mpq_class(1, factorial(j)));
    QExp s = QExp::zero(a.q_trunc());
    for (const auto& [p, col] : a.columns()) {
      const Rational f = Rational(p, PQSeries::kPGrid).pow(j) * inv_fact;
      if (!f.is_zero()) s += col.scaled(f);
    }
    out.emplace(j, std::move(s));
  }
  return WLaurent::from_terms(std::move(out), wtrunc, a.q_trunc());
}

QExp eval_w0(const WLaurent& a) {
  if (a.valuation() < 0) throw DomainError("evaluation at w = 0 of a series with a pole");
  return a.coeff(0);
}

PQSeries fourier_reconstruct(const WLaurent& a, long index, SupportMode mode) {
  if (a.valuation() < 0) throw DomainError("Fourier reconstruction of a series with a pole");
  if (a.wtrunc() >= kExact) throw DomainError("Fourier reconstruction needs a finite w-truncation");
  GridExp top = a.qtrunc();
  if (top >= kExact) {
    top = 1;
    for (const auto& [k, c] : a.terms())
      if (!c.is_zero()) top = std::max(top, c.terms().back().first + 1);
  }
  GridExp lowest = 0;
  for (const auto& [k, c] : a.terms()) {
    for (const auto& [e, v] : c.terms())
      if (e % QExp::kGrid != 0) throw GridError("Fourier reconstruction needs integer q-exponents");
    if (!c.is_zero()) lowest = std::min(lowest, c.valuation());
  }

  const long w = a.wtrunc();
  std::vector<Rational> fact(static_cast<std::size_t>(std::max(w, 1L)));
  for (long j = 0; j < w; ++j) fact[static_cast<std::size_t>(j)] = Rational(factorial(j));

  std::map<long, std::vector<QExp::Term>> columns;
  for (long n = lowest / QExp::kGrid; QExp::integer(n) < top; ++n) {
    std::vector<Rational> moments(static_cast<std::size_t>(w));
    for (long j = 0; j < w; ++j)
      moments[static_cast<std::size_t>(j)] = a.coeff(j).coeff(QExp::integer(n)) * fact[static_cast<std::size_t>(j)];
    const long radius = support_radius(n, index, mode);
    const long size = 2 * radius + 1;
    if (w < size)
      throw InsufficientData("w-truncation " + std::to_string(w) + " is too small for q-order " + std::to_string(n));
    std::vector<Rational> c;
    std::vector<Rational> nodes;
    if (size > 0) {
      for (long r = -radius; r <= radius; ++r) nodes.emplace_back(r);
      c = solve_moment_system(nodes, std::vector<Rational>(moments.begin(), moments.begin() + size));
    }
    for (long j = std::max(size, 0L); j < w; ++j) {
      Rational s;
      for (std::size_t i = 0; i < nodes.size(); ++i) s += c[i] * nodes[i].pow(j);
      if (s != moments[static_cast<std::size_t>(j)])
        throw InconsistentSystem("w-data is not the expansion of an index-" + std::to_string(index) +
                                     " form: surplus row w^" + std::to_string(j) + " fails at q^" +
                                     std::to_string(n),
                                 j, n);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (!c[i].is_zero()) columns[2 * nodes[i].to_long()].emplace_back(QExp::integer(n), c[i]);
  }
  std::map<long, QExp> cols;
  for (auto& [p, terms] : columns) cols.emplace(p, QExp::from_terms(std::move(terms), a.qtrunc()));
  return PQSeries::from_columns(std::move(cols), a.qtrunc());
}

long default_w_trunc(GridExp q_trunc, long index) {
  if (q_trunc >= kExact) throw DomainError("default w-truncation needs a finite q-truncation");
  const long n = q_trunc <= 0 ? 0 : (q_trunc + QExp::kGrid - 1) / QExp::kGrid;
  return 2 * support_radius(n, index, SupportMode::weak) + 4;
}

}  // namespace jacobi
