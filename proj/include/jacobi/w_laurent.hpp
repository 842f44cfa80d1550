#pragma once

#include <map>
#include <optional>
#include <string>

#include "jacobi/pq_series.hpp"
#include "jacobi/qexp.hpp"

namespace jacobi {

/// Position of a coefficient w^w q^n in a WLaurent.
struct WPoint {
  long w;
  Rational n;
  std::string str() const { return "(w^" + std::to_string(w) + ", q^" + n.str() + ")"; }
  friend bool operator==(const WPoint&, const WPoint&) = default;
};

/// Truncated Laurent expansion in w = 2 pi i z with QExp coefficients.
///
/// Exponents >= wtrunc are unknown in w; every coefficient shares the
/// q-truncation qtrunc. Either truncation may be kExact.
class WLaurent {
 public:
  /// Exact zero.
  WLaurent() = default;
  static WLaurent zero(long wtrunc, GridExp qtrunc);
  /// c w^k, exact in w.
  static WLaurent monomial(const QExp& c, long k = 0);
  static WLaurent from_terms(std::map<long, QExp> terms, long wtrunc, GridExp qtrunc);

  long wtrunc() const { return wtrunc_; }
  GridExp qtrunc() const { return qtrunc_; }
  /// Lowest stored w-exponent, or wtrunc when nothing is stored.
  long valuation() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<long, QExp>& terms() const { return terms_; }
  /// Coefficient of w^k; InsufficientData for k >= wtrunc.
  QExp coeff(long k) const;

  WLaurent truncated(long wtrunc, GridExp qtrunc = kExact) const;
  WLaurent scaled(const Rational& c) const;
  WLaurent times_qexp(const QExp& f) const;
  /// Multiplication by w^k.
  WLaurent shifted(long k) const;
  /// d/dw.
  WLaurent derivative() const;
  /// q d/dq on every coefficient.
  WLaurent q_derivative() const;
  /// w -> c w.
  WLaurent substitute_w(const Rational& c) const;
  /// q -> q^c on every coefficient.
  WLaurent substitute_q(const Rational& c) const;
  /// Needs an invertible leading coefficient.
  WLaurent inverse() const;
  WLaurent pow(long n) const;

  WLaurent& operator+=(const WLaurent& o);
  WLaurent& operator-=(const WLaurent& o) { return *this += o.scaled(Rational(-1)); }
  friend WLaurent operator+(WLaurent a, const WLaurent& b) { return a += b; }
  friend WLaurent operator-(WLaurent a, const WLaurent& b) { return a -= b; }
  friend WLaurent operator*(const WLaurent& a, const WLaurent& b);
  friend WLaurent operator/(const WLaurent& a, const WLaurent& b) { return a * b.inverse(); }
  friend WLaurent operator-(const WLaurent& a) { return a.scaled(Rational(-1)); }
  friend WLaurent operator*(const Rational& c, const WLaurent& a) { return a.scaled(c); }
  friend bool operator==(const WLaurent&, const WLaurent&) = default;

  std::string str() const;

 private:
  void normalize();

  std::map<long, QExp> terms_;
  long wtrunc_ = kExact;
  GridExp qtrunc_ = kExact;
};

/// First point, ordered by w then q, where a and b differ inside both truncations.
std::optional<WPoint> first_difference(const WLaurent& a, const WLaurent& b);

/// exp(a) for a of valuation >= 1.
WLaurent w_exp(const WLaurent& a);

/// p = e^w applied columnwise, expanded below w^wtrunc.
WLaurent fourier_to_w(const PQSeries& a, long wtrunc);

/// The w^0 coefficient; DomainError when a principal part is present.
QExp eval_w0(const WLaurent& a);

/// Recovers the Fourier expansion sum c(n, r) p^r q^n of an index-m form from
/// its w-Taylor data, checking every surplus w-order for consistency.
PQSeries fourier_reconstruct(const WLaurent& a, long index, SupportMode mode);

/// 2 floor(sqrt(4 N m + m^2)) + 4 for N = ceil(q_trunc / 24).
long default_w_trunc(GridExp q_trunc, long index);

}  // namespace jacobi
