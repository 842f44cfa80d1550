#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jacobi/rational.hpp"

namespace jacobi {

/// Exact row-by-row Gaussian elimination over the rationals.
///
/// Rows are fed in order and kept in reduced echelon form, so the first row
/// that contradicts the earlier ones is detected the moment it arrives.
class IncrementalSolver {
 public:
  enum class RowStatus { pivot, redundant, inconsistent };

  explicit IncrementalSolver(std::size_t unknowns);

  RowStatus add_row(std::vector<Rational> coeffs, Rational rhs);
  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return rows_.size(); }
  bool determined() const { return rank() == unknowns_; }
  /// Unique solution; throws InsufficientData when the rank is deficient.
  std::vector<Rational> solution() const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Rational> coeffs;
    Rational rhs;
  };
  std::size_t unknowns_;
  std::vector<Row> rows_;
};

/// Solves sum_j c_j x_j^i = moments[i] for i = 0..n-1 (the transposed
/// Vandermonde system) with the O(n^2) Bjorck-Pereyra scheme. Nodes must be
/// distinct.
std::vector<Rational> solve_moment_system(std::span<const Rational> nodes,
                                          std::vector<Rational> moments);

}  // namespace jacobi
