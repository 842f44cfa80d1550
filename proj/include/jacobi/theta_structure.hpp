#pragma once

#include <vector>

#include "jacobi/pq_series.hpp"
#include "jacobi/qexp.hpp"
#include "jacobi/w_laurent.hpp"

namespace jacobi {

/// Coefficients attached to 1 / theta_1 at z = 0.
struct ThetaInverseData {
  /// h_tilde[n]: coefficient of w^(n-1) in 1 / theta_1.
  std::vector<QExp> h_tilde;
  /// h[n] = n! h_tilde[n] theta_1^.(0).
  std::vector<QExp> h;
  /// P[k] = (theta_1^(k') / theta_1)(0), P[0] = 1.
  std::vector<QExp> P;
};

/// Extra q-precision (grid numerators) theta values are computed with so
/// that quotients by theta_1^.(0) come out at the requested truncation.
inline constexpr GridExp kThetaPad = 6;

/// h_tilde and h up to index n_max from 1 / theta1 and P from the recursion,
/// without cross-checks.
ThetaInverseData theta_inverse_coefficients(const PQSeries& theta1, long n_max, GridExp qtrunc);

/// h_tilde and h up to index n_max from 1 / theta1, P from P_{k+1} = P_k' +
/// E_2 P_k / 8. Throws RouteMismatch when h disagrees with the recursion
/// through P or the w^(2m) coefficients of theta_1 / theta_1 fail to vanish.
ThetaInverseData theta_inverse_data(const PQSeries& theta1, long n_max, GridExp qtrunc);
ThetaInverseData theta_inverse_data(long n_max, GridExp qtrunc);

/// P_0 .. P_kmax from the recursion alone.
std::vector<QExp> theta_p_recursion(long k_max, GridExp qtrunc);

/// (theta^(k') / theta)(0) for k = 0 .. k_max from q-derivatives of theta1.
std::vector<QExp> theta_tau_ratios_at_zero(const PQSeries& theta1, long k_max, GridExp qtrunc);

/// theta^((2k+1).)(0) for k = 0 .. k_max.
std::vector<QExp> theta_odd_derivatives_at_zero(const PQSeries& theta1, long k_max, GridExp qtrunc);

/// (theta^(2k.) / theta)(0) for k = 0 .. k_max, from the w-layer quotient.
std::vector<QExp> theta_even_ratios_at_zero(const PQSeries& theta1, long k_max, GridExp qtrunc);

/// h_{2m} = -(2m)! sum_{k=1}^m h_{2m-2k} 2^k P_k / ((2m-2k)! (2k+1)!).
std::vector<QExp> h_by_recursion(long n_max, const std::vector<QExp>& P);

/// F_n = (1/theta_i) sum_k C(n, k) h_{n-k} theta_i^(k.) with h from theta1.
WLaurent f_n(const PQSeries& theta1, const PQSeries& theta_i, long n, long wtrunc, GridExp qtrunc);
WLaurent f_n(long n, ThetaIndex i, long wtrunc, GridExp qtrunc);

/// theta^2 / theta^.(0)^2 for any rational multiple of theta_1.
PQSeries phi_from_theta(const PQSeries& theta1, GridExp qtrunc);

/// Left-hand side of the fourth-order theta_1 identity; zero for theta_1.
PQSeries theta_corollary_residual(const PQSeries& theta1);
/// Its six terms in order, for inspecting the cancellation.
std::vector<PQSeries> theta_corollary_terms(const PQSeries& theta1);

/// The shift formulas applied to given Fourier expansions J_0 .. J_n.
PQSeries shifted_combination(int i, long n, const std::vector<PQSeries>& j);

/// sum_l C(n, l) 2^(l-n) J_l shifted by z -> z + tau/2 (i = 4), by
/// z -> z + 1/2 + tau/2 (i = 3), or J_n(z + 1/2) (i = 2), on windowed
/// Fourier expansions.
PQSeries shifted_deformed_eisenstein(int i, long n, GridExp qtrunc, long window);

}  // namespace jacobi
