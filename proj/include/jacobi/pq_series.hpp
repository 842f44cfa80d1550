#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacobi/qexp.hpp"

namespace jacobi {

/// Position of a coefficient p^r q^n in a Fourier expansion.
struct FourierPoint {
  Rational n;
  Rational r;
  std::string str() const { return "(n=" + n.str() + ", r=" + r.str() + ")"; }
  friend bool operator==(const FourierPoint&, const FourierPoint&) = default;
};

/// Truncated Fourier expansion sum c(n, r) p^r q^n, Laurent in p on the 1/2
/// grid with QExp columns.
///
/// Validity region: column r (p-numerator) is known below the q-numerator
/// q_trunc + shear * r. The shear is zero for ordinary expansions and becomes
/// nonzero after p -> p q^lambda, which moves column r up by lambda * r.
/// With a window P only columns |r| <= P are known; otherwise every absent
/// column is zero inside its validity region.
class PQSeries {
 public:
  static constexpr long kPGrid = 2;

  /// Exact zero.
  PQSeries() = default;
  static PQSeries zero(GridExp q_trunc);
  /// z-independent series: the single column p^0.
  static PQSeries from_qexp(const QExp& c);
  static PQSeries monomial(const Rational& c, long p_num, GridExp q_num);
  /// Columns keyed by p-numerator; each is re-truncated to the validity profile.
  static PQSeries from_columns(std::map<long, QExp> columns, GridExp q_trunc,
                               std::optional<long> window = std::nullopt, GridExp shear = 0);

  GridExp q_trunc() const { return trunc_; }
  GridExp shear() const { return shear_; }
  GridExp column_trunc(long p_num) const;
  const std::optional<long>& window() const { return window_; }
  bool in_window(long p_num) const;
  const std::map<long, QExp>& columns() const { return columns_; }
  /// Column p^(p_num/2); zero when absent, WindowError outside the window.
  QExp column(long p_num) const;
  /// Coefficient c(n, r) for grid numerators.
  Rational coeff(GridExp q_num, long p_num) const;
  bool is_zero() const { return columns_.empty(); }
  /// Largest |p-numerator| among stored columns.
  long support_radius() const;

  PQSeries truncated(GridExp q_trunc) const;
  PQSeries with_window(long window) const;
  PQSeries scaled(const Rational& c) const;
  PQSeries times_qexp(const QExp& f) const;
  /// Multiplication by c p^(p_num/2) q^(q_num/24).
  PQSeries times_monomial(const Rational& c, long p_num, GridExp q_num) const;
  /// The operator p d/dp (1/(2 pi i) d/dz).
  PQSeries p_derivative() const;
  /// The operator q d/dq.
  PQSeries q_derivative() const;

  PQSeries& operator+=(const PQSeries& o);
  PQSeries& operator-=(const PQSeries& o) { return *this += o.scaled(Rational(-1)); }
  friend PQSeries operator+(PQSeries a, const PQSeries& b) { return a += b; }
  friend PQSeries operator-(PQSeries a, const PQSeries& b) { return a -= b; }
  friend PQSeries operator*(const PQSeries& a, const PQSeries& b);
  friend PQSeries operator-(const PQSeries& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const PQSeries&, const PQSeries&) = default;

  /// Aligned table of c(n, r): one row per q-exponent, one column per p-exponent.
  std::string table() const;

 private:
  void normalize();

  std::map<long, QExp> columns_;
  GridExp trunc_ = kExact;
  GridExp shear_ = 0;
  std::optional<long> window_;
};

/// First (n, r), ordered by n then r, where a and b differ inside both validity regions.
std::optional<FourierPoint> first_difference(const PQSeries& a, const PQSeries& b);

/// p -> (+-1)^r p q^lambda. lambda * r must land on the q-grid; negation is
/// only defined on integer p-powers.
PQSeries substitute_p(const PQSeries& a, const Rational& lambda, bool negate);
/// z -> z + lambda tau.
inline PQSeries substitute_elliptic(const PQSeries& a, long lambda) {
  return substitute_p(a, Rational(lambda), false);
}
/// z -> z + 1/2.
inline PQSeries substitute_half_period(const PQSeries& a) {
  return substitute_p(a, Rational(0), true);
}

/// Sum of all columns (z = 0). Requires full support and no shear.
QExp restrict_z0(const PQSeries& a);

enum class SupportMode { holomorphic, weak };

/// Largest |r| allowed at q-order n for index m: r^2 <= 4nm (+ m^2 for weak).
long support_radius(long n, long index, SupportMode mode);

/// Coefficients outside the support allowed for index m.
std::vector<FourierPoint> singular_coefficient_check(const PQSeries& a, long index, SupportMode mode);

/// r -> -r applied columnwise.
PQSeries reflect_p(const PQSeries& a);

struct ThetaIndex {
  explicit ThetaIndex(int v);
  int value;
};

/// Rational theta series. theta(1) is i * theta_1 = q^(1/8)(p^(1/2) - p^(-1/2))
/// prod (1-q^m)(1-p q^m)(1-p^-1 q^m); theta(2..4) equal the classical
/// theta_2..theta_4 obtained from theta_1 by half-period shifts.
PQSeries theta(ThetaIndex i, GridExp q_trunc);
/// sum_r r * column_r of theta(1): the z-derivative at z = 0.
QExp theta_z_derivative_at_zero(GridExp q_trunc);

enum class WeakKind { minus2, zero };

/// phi_{-2,1} = theta_1^2 / theta_1'(0)^2, or phi_{0,1} = 12 phi_{-2,1} wp.
PQSeries phi_weak(WeakKind kind, GridExp q_trunc);

}  // namespace jacobi
