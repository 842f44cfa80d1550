#include "jacobi/pq_series.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "jacobi/deformed_eisenstein.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/theta_structure.hpp"
#include "jacobi/w_laurent.hpp"

namespace jacobi {

namespace {

bool is_exact_zero(const PQSeries& a) { return a.is_zero() && a.q_trunc() >= kExact && !a.window(); }

Rational p_value(long p_num) { return Rational(p_num, PQSeries::kPGrid); }

}  // namespace

PQSeries PQSeries::zero(GridExp q_trunc) {
  PQSeries r;
  r.trunc_ = q_trunc;
  return r;
}

PQSeries PQSeries::from_qexp(const QExp& c) {
  PQSeries r = zero(c.trunc());
  if (!c.is_zero()) r.columns_.emplace(0, c);
  return r;
}

PQSeries PQSeries::monomial(const Rational& c, long p_num, GridExp q_num) {
  PQSeries r;
  if (!c.is_zero()) r.columns_.emplace(p_num, QExp::monomial(c, q_num));
  return r;
}

PQSeries PQSeries::from_columns(std::map<long, QExp> columns, GridExp q_trunc,
                                std::optional<long> window, GridExp shear) {
  PQSeries r;
  r.columns_ = std::move(columns);
  r.trunc_ = q_trunc;
  r.window_ = window;
  r.shear_ = shear;
  r.normalize();
  return r;
}

void PQSeries::normalize() {
  for (auto it = columns_.begin(); it != columns_.end();) {
    if (!in_window(it->first)) {
      it = columns_.erase(it);
      continue;
    }
    it->second = it->second.truncated(column_trunc(it->first));
    if (it->second.is_zero())
      it = columns_.erase(it);
    else
      ++it;
  }
}

GridExp PQSeries::column_trunc(long p_num) const {
  if (trunc_ >= kExact) return kExact;
  return trunc_ + shear_ * p_num;
}

bool PQSeries::in_window(long p_num) const { return !window_ || std::labs(p_num) <= *window_; }

QExp PQSeries::column(long p_num) const {
  if (!in_window(p_num)) throw WindowError("column outside the exact p-window");
  auto it = columns_.find(p_num);
  if (it != columns_.end()) return it->second;
  return QExp::zero(column_trunc(p_num));
}

Rational PQSeries::coeff(GridExp q_num, long p_num) const { return column(p_num).coeff(q_num); }

long PQSeries::support_radius() const {
  long r = 0;
  for (const auto& [p, c] : columns_) r = std::max(r, std::labs(p));
  return r;
}

PQSeries PQSeries::truncated(GridExp q_trunc) const {
  PQSeries r = *this;
  r.trunc_ = std::min(trunc_, q_trunc);
  r.normalize();
  return r;
}

PQSeries PQSeries::with_window(long window) const {
  PQSeries r = *this;
  r.window_ = window_ ? std::min(*window_, window) : window;
  r.normalize();
  return r;
}

PQSeries PQSeries::scaled(const Rational& c) const {
  PQSeries r = *this;
  for (auto& [p, col] : r.columns_) col = col.scaled(c);
  r.normalize();
  return r;
}

PQSeries PQSeries::times_qexp(const QExp& f) const {
  PQSeries g = from_qexp(f);
  g.shear_ = shear_;
  return *this * g;
}

PQSeries PQSeries::times_monomial(const Rational& c, long p_num, GridExp q_num) const {
  PQSeries r;
  r.shear_ = shear_;
  r.trunc_ = trunc_ >= kExact ? kExact : trunc_ + q_num - shear_ * p_num;
  if (window_) {
    if (p_num != 0) throw WindowError("cannot shift a windowed series in p");
    r.window_ = window_;
  }
  for (const auto& [p, col] : columns_) r.columns_.emplace(p + p_num, col.shifted(q_num).scaled(c));
  r.normalize();
  return r;
}

PQSeries PQSeries::p_derivative() const {
  PQSeries r = *this;
  for (auto& [p, col] : r.columns_) col = col.scaled(p_value(p));
  r.normalize();
  return r;
}

PQSeries PQSeries::q_derivative() const {
  PQSeries r = *this;
  for (auto& [p, col] : r.columns_) col = col.derivative();
  r.normalize();
  return r;
}

PQSeries& PQSeries::operator+=(const PQSeries& o) {
  if (is_exact_zero(o)) return *this;
  if (is_exact_zero(*this)) return *this = o;
  if (shear_ != o.shear_) throw DomainError("cannot add expansions with different validity shear");
  trunc_ = std::min(trunc_, o.trunc_);
  if (o.window_) window_ = window_ ? std::min(*window_, *o.window_) : *o.window_;
  for (const auto& [p, col] : o.columns_) {
    auto [it, inserted] = columns_.try_emplace(p, col);
    if (!inserted) it->second += col;
  }
  normalize();
  return *this;
}

PQSeries operator*(const PQSeries& a, const PQSeries& b) {
  if (is_exact_zero(a) || is_exact_zero(b)) return PQSeries();
  if (a.shear_ != b.shear_) throw DomainError("cannot multiply expansions with different validity shear");
  if (a.window_ && b.window_) throw WindowError("product of two windowed expansions has no sound window");
  const GridExp sigma = a.shear_;

  GridExp t = trunc_add(a.trunc_, b.trunc_);
  for (const auto& [s, col] : a.columns_)
    t = std::min(t, trunc_add(b.trunc_, col.valuation() - sigma * s));
  for (const auto& [s, col] : b.columns_)
    t = std::min(t, trunc_add(a.trunc_, col.valuation() - sigma * s));

  std::optional<long> window;
  const PQSeries* windowed = a.window_ ? &a : (b.window_ ? &b : nullptr);
  if (windowed) {
    const PQSeries& full = windowed == &a ? b : a;
    // Unknown columns beyond the window are assumed q-holomorphic, which holds
    // for every windowed expansion this library builds.
    if (windowed->shear_ != 0) throw WindowError("windowed factor must be unsheared");
    for (const auto& [s, col] : windowed->columns_)
      if (col.valuation() < 0) throw WindowError("windowed factor must be q-holomorphic");
    t = std::min(t, full.trunc_);
    window = *windowed->window_ - full.support_radius();
    if (*window < 0) throw WindowError("product window is empty");
  }

  std::map<long, QExp> cols;
  for (const auto& [s, ca] : a.columns_) {
    for (const auto& [u, cb] : b.columns_) {
      const long r = s + u;
      if (window && std::labs(r) > *window) continue;
      GridExp limit = t >= kExact ? kExact : t + sigma * r;
      QExp prod = QExp::multiply(ca, cb, limit);
      auto [it, inserted] = cols.try_emplace(r, prod);
      if (!inserted) it->second += prod;
    }
  }
  return PQSeries::from_columns(std::move(cols), t, window, sigma);
}

std::string PQSeries::table() const {
  std::set<GridExp> rows;
  for (const auto& [p, col] : columns_)
    for (const auto& [e, c] : col.terms()) rows.insert(e);
  std::vector<long> ps;
  for (const auto& [p, col] : columns_) ps.push_back(p);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"n\\r"};
  for (long p : ps) header.push_back(p_value(p).str());
  cells.push_back(header);
  for (GridExp e : rows) {
    std::vector<std::string> line{Rational(e, QExp::kGrid).str()};
    for (long p : ps) {
      const QExp& col = columns_.at(p);
      line.push_back(e < col.trunc() ? col.coeff(e).str() : "?");
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t j = 0; j < line.size(); ++j)
      os << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << line[j];
    os << "\n";
  }
  os << "q-truncation " << Rational(trunc_ >= kExact ? 0 : trunc_, QExp::kGrid).str();
  if (trunc_ >= kExact) os << " (exact)";
  if (window_) os << ", p-window " << p_value(*window_).str();
  os << "\n";
  return os.str();
}

std::optional<FourierPoint> first_difference(const PQSeries& a, const PQSeries& b) {
  std::set<long> keys;
  for (const auto& [p, c] : a.columns()) keys.insert(p);
  for (const auto& [p, c] : b.columns()) keys.insert(p);
  std::optional<FourierPoint> best;
  for (long p : keys) {
    if (!a.in_window(p) || !b.in_window(p)) continue;
    auto d = first_difference(a.column(p), b.column(p));
    if (!d) continue;
    FourierPoint pt{Rational(*d, QExp::kGrid), p_value(p)};
    if (!best || pt.n < best->n || (pt.n == best->n && pt.r < best->r)) best = pt;
  }
  return best;
}

PQSeries substitute_p(const PQSeries& a, const Rational& lambda, bool negate) {
  const Rational shear_step = lambda * Rational(QExp::kGrid / PQSeries::kPGrid);
  if (!shear_step.is_integer()) throw GridError("p -> p q^lambda leaves the q-grid");
  const GridExp step = shear_step.to_long();
  std::map<long, QExp> cols;
  for (const auto& [p, col] : a.columns()) {
    QExp c = col.shifted(step * p);
    if (negate) {
      if (p % 2 != 0) throw DomainError("half-period shift of a half-integer p-power needs complex coefficients");
      if ((p / 2) % 2 != 0) c = -c;
    }
    cols.emplace(p, std::move(c));
  }
  return PQSeries::from_columns(std::move(cols), a.q_trunc(), a.window(), a.shear() + step);
}

QExp restrict_z0(const PQSeries& a) {
  if (a.window()) throw WindowError("restriction to z = 0 needs full p-support");
  if (a.shear() != 0) throw DomainError("restriction to z = 0 needs an unsheared expansion");
  QExp sum = QExp::zero(a.q_trunc());
  for (const auto& [p, col] : a.columns()) sum += col;
  return sum;
}

long support_radius(long n, long index, SupportMode mode) {
  long bound = 4 * n * index + (mode == SupportMode::weak ? index * index : 0);
  if (bound < 0) return -1;
  long r = 0;
  while ((r + 1) * (r + 1) <= bound) ++r;
  return r;
}

std::vector<FourierPoint> singular_coefficient_check(const PQSeries& a, long index, SupportMode mode) {
  std::vector<FourierPoint> out;
  const Rational m(index);
  for (const auto& [p, col] : a.columns()) {
    const Rational r = p_value(p);
    for (const auto& [e, c] : col.terms()) {
      const Rational n(e, QExp::kGrid);
      Rational bound = Rational(4) * n * m + (mode == SupportMode::weak ? m * m : Rational(0));
      if (r * r > bound) out.push_back(FourierPoint{n, r});
    }
  }
  std::sort(out.begin(), out.end(), [](const FourierPoint& x, const FourierPoint& y) {
    return x.n < y.n || (x.n == y.n && x.r < y.r);
  });
  return out;
}

PQSeries reflect_p(const PQSeries& a) {
  std::map<long, QExp> cols;
  for (const auto& [p, col] : a.columns()) cols.emplace(-p, col);
  return PQSeries::from_columns(std::move(cols), a.q_trunc(), a.window(), -a.shear());
}

ThetaIndex::ThetaIndex(int v) : value(v) {
  if (v < 1 || v > 4) throw DomainError("theta index must be 1, 2, 3 or 4");
}

PQSeries theta(ThetaIndex i, GridExp q_trunc) {
  const bool half_p = i.value <= 2;
  // theta_1, theta_2 carry q^(1/8)(p^(1/2) -+ p^(-1/2)); theta_3, theta_4 have
  // their p-factors at q^(m - 1/2).
  const GridExp prefactor_q = half_p ? 3 : 0;
  const GridExp inner = q_trunc - prefactor_q;
  const GridExp offset = half_p ? 0 : -QExp::kGrid / 2;
  const Rational sign(i.value == 1 || i.value == 4 ? -1 : 1);

  PQSeries acc = PQSeries::from_qexp(QExp::constant(Rational(1))).truncated(std::max<GridExp>(inner, 0));
  for (long m = 1; QExp::integer(m) + offset < inner; ++m) {
    PQSeries factor = PQSeries::monomial(Rational(1), 0, 0) +
                      PQSeries::monomial(sign, 2, QExp::integer(m) + offset) +
                      PQSeries::monomial(sign, -2, QExp::integer(m) + offset) +
                      PQSeries::monomial(Rational(1), 0, 2 * (QExp::integer(m) + offset));
    if (QExp::integer(m) < inner)
      factor = factor * (PQSeries::monomial(Rational(1), 0, 0) + PQSeries::monomial(Rational(-1), 0, QExp::integer(m)));
    acc = (acc * factor).truncated(inner);
  }
  if (!half_p) return acc;
  PQSeries pre = PQSeries::monomial(Rational(1), 1, 3) +
                 PQSeries::monomial(Rational(i.value == 1 ? -1 : 1), -1, 3);
  return acc * pre;
}

QExp theta_z_derivative_at_zero(GridExp q_trunc) {
  PQSeries t = theta(ThetaIndex(1), q_trunc);
  QExp sum = QExp::zero(q_trunc);
  for (const auto& [p, col] : t.columns()) sum += col.scaled(p_value(p));
  return sum;
}

PQSeries phi_weak(WeakKind kind, GridExp q_trunc) {
  if (kind == WeakKind::minus2) {
    return phi_from_theta(theta(ThetaIndex(1), q_trunc + 3), q_trunc);
  }
  const long w = default_w_trunc(q_trunc, 1) + 4;
  WLaurent prod = fourier_to_w(phi_weak(WeakKind::minus2, q_trunc), w) * weierstrass_p(w, q_trunc).series;
  return fourier_reconstruct(prod, 1, SupportMode::weak).scaled(Rational(12));
}

}  // namespace jacobi
