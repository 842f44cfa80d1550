#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace jacobi {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: integers convert implicitly
  Rational(long num, long den);
  explicit Rational(const mpz_class& value) : v_(value) {}
  explicit Rational(mpq_class value);

  /// Parses "a", "-a" or "a/b".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  /// Integer value; throws DomainError when not an integer fitting in long.
  long to_long() const;
  Rational inverse() const;
  Rational pow(long exponent) const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational floor() const;
  Rational ceil() const;

  /// "num/den", or just "num" for integers.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

/// Bernoulli number B_n with B_1 = -1/2 (generating function x/(e^x - 1)).
Rational bernoulli(long n);
mpz_class binomial(long n, long k);
mpz_class factorial(long n);
/// Sum of d^power over the positive divisors d of n.
mpz_class divisor_sigma(long power, long n);

}  // namespace jacobi
