#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jacobi/errors.hpp"
#include "jacobi/linear_solve.hpp"
#include "jacobi/qexp.hpp"

using namespace jacobi;

namespace {

constexpr GridExp G = QExp::kGrid;

long sigma(long power, long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      long p = 1;
      for (long i = 0; i < power; ++i) p *= d;
      s += p;
    }
  return s;
}

// prod (1 - q^n)^24 q, by repeated multiplication of integer polynomials.
std::vector<mpz_class> delta_product(long order) {
  std::vector<mpz_class> c(order, 0);
  c[0] = 1;
  for (long n = 1; n < order; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (long e = order - 1; e >= n; --e) c[e] -= c[e - n];
  std::vector<mpz_class> out(order, 0);
  for (long e = 1; e < order; ++e) out[e] = c[e - 1];
  return out;
}

QExp random_series(std::mt19937& rng, GridExp lo, GridExp trunc) {
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<QExp::Term> terms;
  for (GridExp e = lo; e < trunc; e += 3) terms.emplace_back(e, Rational(coef(rng), den(rng)));
  return QExp::from_terms(terms, trunc);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("6/-4").str() == "-3/2");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse("10/5").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(-7, 2).ceil() == Rational(-3));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("bernoulli numbers, binomials and factorials") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 5) == 0);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("Eisenstein coefficients against divisor sums") {
  const long order = 15;
  for (long k : {2L, 4L, 6L, 8L, 10L}) {
    const QExp e = eisenstein(k, order * G);
    const Rational scale = Rational(-2 * k) / bernoulli(k);
    CHECK(e.coeff(0) == Rational(1));
    for (long n = 1; n < order; ++n) CHECK(e.coeff(n * G) == scale * Rational(sigma(k - 1, n)));
  }
  CHECK(eisenstein(4, 3 * G).coeff(G) == Rational(240));
  CHECK(eisenstein(6, 3 * G).coeff(2 * G) == Rational(-504 * 33));
}

TEST_CASE("Delta against the product formula") {
  const long order = 20;
  const QExp d = delta(order * G);
  const auto oracle = delta_product(order);
  for (long n = 0; n < order; ++n) CHECK(d.coeff(n * G) == Rational(oracle[n]));
  CHECK(d.coeff(2 * G) == Rational(-24));
  CHECK(d.coeff(3 * G) == Rational(252));
}

TEST_CASE("Delta from E4 and E6") {
  const GridExp t = 12 * G;
  const QExp e4 = eisenstein(4, t), e6 = eisenstein(6, t);
  CHECK(equal_within_truncation((e4.pow(3) - e6.pow(2)).scaled(Rational(1, 1728)), delta(t)));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(20241016);
  for (int trial = 0; trial < 20; ++trial) {
    const QExp a = random_series(rng, -6, 10 * G);
    const QExp b = random_series(rng, 3, 8 * G);
    const QExp c = random_series(rng, 0, 9 * G);
    CHECK(equal_within_truncation((a * b) * c, a * (b * c)));
    CHECK(equal_within_truncation(a * (b + c), a * b + a * c));
    CHECK(a * b == b * a);
    CHECK(equal_within_truncation((a * b).derivative(), a.derivative() * b + a * b.derivative()));
    if (!c.is_zero() && c.valuation() == 0) {
      const QExp one = c * c.inverse();
      CHECK(equal_within_truncation(one, QExp::constant(Rational(1), one.trunc())));
    }
  }
}

TEST_CASE("truncation bookkeeping") {
  const QExp a = QExp::from_terms({{6, Rational(1)}, {30, Rational(2)}}, 60);
  const QExp b = QExp::from_terms({{12, Rational(1)}}, 48);
  // min(Ta + vb, Tb + va) = min(60 + 12, 48 + 6)
  CHECK((a * b).trunc() == 54);
  CHECK((a + b).trunc() == 48);
  CHECK(QExp::constant(Rational(3)).is_exact());
  CHECK((a * QExp::constant(Rational(3))).trunc() == 60);
  CHECK(QExp::multiply(a, b, 40).trunc() == 40);
  CHECK(a.inverse().trunc() == 60 - 2 * 6);
  CHECK_THROWS_AS(a.coeff(60), InsufficientData);
  CHECK_THROWS_AS(QExp::zero(48).inverse(), DivisionError);
  CHECK_THROWS_AS(QExp::from_terms({{1, Rational(1)}}, 24).substitute_q(Rational(1, 2)), GridError);
}

TEST_CASE("substitution and printing") {
  const QExp e = eisenstein(4, 4 * G);
  const QExp half = e.substitute_q(Rational(1, 2));
  CHECK(half.trunc() == 2 * G);
  CHECK(half.coeff(G / 2) == Rational(240));
  CHECK(eisenstein(2, 3 * G).str() == "1 - 24*q - 72*q^2 + O(q^3)");
  CHECK(q_power_str(3) == "q^(1/8)");
}

TEST_CASE("classical Ramanujan equations") {
  const GridExp t = 21 * G;
  const QExp e2 = eisenstein(2, t), e4 = eisenstein(4, t), e6 = eisenstein(6, t);
  CHECK(equal_within_truncation(e2.derivative(), (e2 * e2 - e4).scaled(Rational(1, 12))));
  CHECK(equal_within_truncation(e4.derivative(), (e2 * e4 - e6).scaled(Rational(1, 3))));
  CHECK(equal_within_truncation(e6.derivative(), (e2 * e6 - e4 * e4).scaled(Rational(1, 2))));
}

TEST_CASE("fitting to the modular basis") {
  const GridExp t = 10 * G;
  const QExp e4 = eisenstein(4, t), e6 = eisenstein(6, t);
  SUBCASE("E8 = E4^2") {
    const ModularFit fit = express_in_modular_basis(eisenstein(8, t), 8);
    REQUIRE(fit.consistent);
    REQUIRE(fit.terms.size() == 1);
    CHECK(fit.terms[0].e4_power == 2);
    CHECK(fit.terms[0].coefficient == Rational(1));
  }
  SUBCASE("Delta at weight 12") {
    const ModularFit fit = express_in_modular_basis(delta(t), 12);
    REQUIRE(fit.consistent);
    for (const auto& m : fit.terms) {
      if (m.e4_power == 3) CHECK(m.coefficient == Rational(1, 1728));
      if (m.e6_power == 2) CHECK(m.coefficient == Rational(-1, 1728));
    }
  }
  SUBCASE("E2 is not modular") {
    const ModularFit fit = express_in_modular_basis(eisenstein(2, t), 2);
    CHECK_FALSE(fit.consistent);
    REQUIRE(fit.first_mismatch);
    CHECK(*fit.first_mismatch == 0);
  }
  SUBCASE("perturbed E10 fails at the perturbed order") {
    const QExp bad = (e4 * e6) + QExp::monomial(Rational(1), 7 * G, t);
    const ModularFit fit = express_in_modular_basis(bad, 10);
    CHECK_FALSE(fit.consistent);
    CHECK(fit.first_mismatch == 7);
  }
  SUBCASE("too short to overdetermine") {
    CHECK_THROWS_AS(express_in_modular_basis(eisenstein(12, 4 * G), 12), InsufficientData);
  }
  CHECK_THROWS_AS(express_in_modular_basis(e4, -2), DomainError);
}

TEST_CASE("moment solver against Gaussian elimination") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> val(-20, 20);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 6;
    std::vector<Rational> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back(Rational(static_cast<long>(i) - 3, 2));
    std::vector<Rational> moments;
    for (std::size_t i = 0; i < n; ++i) moments.push_back(Rational(val(rng), 3));
    const auto fast = solve_moment_system(nodes, moments);
    IncrementalSolver slow(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row;
      for (const Rational& x : nodes) row.push_back(x.pow(static_cast<long>(i)));
      slow.add_row(row, moments[i]);
    }
    CHECK(fast == slow.solution());
  }
}

TEST_CASE("incremental solver row status") {
  IncrementalSolver s(2);
  CHECK(s.add_row({Rational(1), Rational(1)}, Rational(3)) == IncrementalSolver::RowStatus::pivot);
  CHECK(s.add_row({Rational(2), Rational(2)}, Rational(6)) == IncrementalSolver::RowStatus::redundant);
  CHECK_THROWS_AS(s.solution(), InsufficientData);
  CHECK(s.add_row({Rational(1), Rational(-1)}, Rational(1)) == IncrementalSolver::RowStatus::pivot);
  CHECK(s.add_row({Rational(1), Rational(0)}, Rational(5)) == IncrementalSolver::RowStatus::inconsistent);
  CHECK(s.solution() == std::vector<Rational>{Rational(2), Rational(1)});
}
