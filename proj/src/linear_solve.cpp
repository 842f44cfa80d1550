#include "jacobi/linear_solve.hpp"

#include "jacobi/errors.hpp"

namespace jacobi {

IncrementalSolver::IncrementalSolver(std::size_t unknowns) : unknowns_(unknowns) {}

IncrementalSolver::RowStatus IncrementalSolver::add_row(std::vector<Rational> coeffs, Rational rhs) {
  if (coeffs.size() != unknowns_) throw DomainError("row length does not match unknown count");
  for (const Row& row : rows_) {
    if (coeffs[row.pivot].is_zero()) continue;
    Rational f = coeffs[row.pivot];
    for (std::size_t j = 0; j < unknowns_; ++j)
      if (!row.coeffs[j].is_zero()) coeffs[j] -= f * row.coeffs[j];
    rhs -= f * row.rhs;
  }
  std::size_t pivot = unknowns_;
  for (std::size_t j = 0; j < unknowns_; ++j) {
    if (!coeffs[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == unknowns_) return rhs.is_zero() ? RowStatus::redundant : RowStatus::inconsistent;

  Rational inv = coeffs[pivot].inverse();
  for (auto& c : coeffs) c *= inv;
  rhs *= inv;
  for (Row& row : rows_) {
    if (row.coeffs[pivot].is_zero()) continue;
    Rational f = row.coeffs[pivot];
    for (std::size_t j = 0; j < unknowns_; ++j)
      if (!coeffs[j].is_zero()) row.coeffs[j] -= f * coeffs[j];
    row.rhs -= f * rhs;
  }
  rows_.push_back(Row{pivot, std::move(coeffs), std::move(rhs)});
  return RowStatus::pivot;
}

std::vector<Rational> IncrementalSolver::solution() const {
  if (!determined()) throw InsufficientData("linear system is underdetermined");
  std::vector<Rational> x(unknowns_);
  for (const Row& row : rows_) x[row.pivot] = row.rhs;
  return x;
}

std::vector<Rational> solve_moment_system(std::span<const Rational> nodes,
                                          std::vector<Rational> b) {
  const std::size_t size = nodes.size();
  if (b.size() != size) throw DomainError("moment system must be square");
  if (size == 0) return b;
  const std::size_t n = size - 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = n; i > k; --i) b[i] -= nodes[k] * b[i - 1];
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t i = kk + 1; i <= n; ++i) {
      Rational d = nodes[i] - nodes[i - kk - 1];
      if (d.is_zero()) throw DomainError("moment system nodes must be distinct");
      b[i] /= d;
    }
    for (std::size_t i = kk; i < n; ++i) b[i] -= b[i + 1];
  }
  return b;
}

}  // namespace jacobi
