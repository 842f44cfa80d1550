#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/rational.hpp"

namespace jacobi {

/// Exponents and truncations are stored as numerators over a fixed grid.
using GridExp = long;

/// Truncation value meaning "known exactly, no unknown tail".
inline constexpr GridExp kExact = std::numeric_limits<long>::max() / 4;

/// Saturating addition on truncation values (kExact absorbs).
inline GridExp trunc_add(GridExp a, GridExp b) {
  if (a >= kExact || b >= kExact) return kExact;
  return a + b;
}

/// Truncated Laurent expansion in q on the 1/24 exponent grid.
///
/// Stores the nonzero coefficients with exponent numerator below the
/// truncation; everything at or above the truncation is unknown.
class QExp {
 public:
  static constexpr long kGrid = 24;
  using Term = std::pair<GridExp, Rational>;

  /// Exact zero.
  QExp() = default;
  static QExp zero(GridExp trunc);
  static QExp constant(const Rational& c, GridExp trunc = kExact);
  static QExp monomial(const Rational& c, GridExp exponent, GridExp trunc = kExact);
  /// Terms in any order; duplicates are summed, zeros and terms >= trunc dropped.
  static QExp from_terms(std::vector<Term> terms, GridExp trunc);
  /// q-exponent of an integer power: n -> 24 n.
  static constexpr GridExp integer(long n) { return n * kGrid; }

  GridExp trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kExact; }
  /// Lowest stored exponent, or the truncation when nothing is stored.
  GridExp valuation() const;
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Coefficient of q^(e/24); throws InsufficientData for e >= trunc.
  Rational coeff(GridExp e) const;
  /// Leading (lowest) coefficient; throws DivisionError if none is stored.
  const Rational& leading() const;

  QExp truncated(GridExp t) const;
  /// Multiplication by q^(s/24).
  QExp shifted(GridExp s) const;
  QExp scaled(const Rational& c) const;
  /// Multiplicative inverse; throws DivisionError for zero or exact non-monomials.
  QExp inverse() const;
  QExp pow(long n) const;
  /// The operator q d/dq.
  QExp derivative() const;
  /// q -> q^c; every exponent must land on the grid.
  QExp substitute_q(const Rational& c) const;

  /// Product computed only below `limit` (result truncation <= limit).
  static QExp multiply(const QExp& a, const QExp& b, GridExp limit = kExact);

  QExp& operator+=(const QExp& o);
  QExp& operator-=(const QExp& o);
  QExp& operator*=(const QExp& o) { return *this = multiply(*this, o); }
  friend QExp operator+(QExp a, const QExp& b) { return a += b; }
  friend QExp operator-(QExp a, const QExp& b) { return a -= b; }
  friend QExp operator*(const QExp& a, const QExp& b) { return multiply(a, b); }
  friend QExp operator/(const QExp& a, const QExp& b) { return multiply(a, b.inverse()); }
  friend QExp operator-(const QExp& a) { return a.scaled(Rational(-1)); }
  friend QExp operator*(const Rational& c, const QExp& a) { return a.scaled(c); }

  /// Structural equality: same terms and same truncation.
  friend bool operator==(const QExp& a, const QExp& b) = default;

  /// "1 - 24*q - 72*q^2 + O(q^3)".
  std::string str() const;

 private:
  std::vector<Term> terms_;
  GridExp trunc_ = kExact;
};

/// First exponent (numerator) below the common truncation where a and b differ.
std::optional<GridExp> first_difference(const QExp& a, const QExp& b);
inline bool equal_within_truncation(const QExp& a, const QExp& b) {
  return !first_difference(a, b).has_value();
}

/// q^(e/24) rendered as "q", "q^3" or "q^(1/8)"; empty for e = 0.
std::string q_power_str(GridExp e);

/// E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}(N) q^N, truncated at `trunc`.
QExp eisenstein(long weight, GridExp trunc);
/// Delta = q prod (1 - q^n)^24.
QExp delta(GridExp trunc);

struct BasisMonomial {
  long e4_power;
  long e6_power;
  Rational coefficient;
};

/// Outcome of fitting a q-expansion to {E4^a E6^b : 4a + 6b = weight}.
struct ModularFit {
  bool consistent = false;
  std::vector<BasisMonomial> terms;
  /// Integer q-order of the first coefficient the fit cannot match.
  std::optional<long> first_mismatch;
};

/// Exact fit over the monomial basis of holomorphic modular forms of the given
/// weight. Needs at least basis-dimension + 3 integer q-orders below the
/// truncation, else InsufficientData.
ModularFit express_in_modular_basis(const QExp& f, long weight);

}  // namespace jacobi
