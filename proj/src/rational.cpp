#include "jacobi/rational.hpp"

#include <vector>

#include "jacobi/errors.hpp"

namespace jacobi {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw DivisionError("rational with zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw DomainError("rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(q);
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational bernoulli(long n) {
  if (n < 0) throw DomainError("bernoulli index must be nonnegative");
  // sum_{j<m} C(m, j) B_j = 0 for m >= 2
  std::vector<mpq_class> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (long m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    for (long j = 0; j < m; ++j) acc += mpq_class(binomial(m + 1, j)) * b[j];
    b[m] = -acc / mpq_class(m + 1);
    b[m].canonicalize();
  }
  return Rational(b[n]);
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class divisor_sigma(long power, long n) {
  mpz_class total = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(power));
    total += t;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(power));
      total += t;
    }
  }
  return total;
}

}  // namespace jacobi
