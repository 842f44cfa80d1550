#pragma once

#include <optional>
#include <vector>

#include "jacobi/pq_series.hpp"
#include "jacobi/qexp.hpp"
#include "jacobi/w_laurent.hpp"

namespace jacobi {

/// A w-Laurent element of V_n: weight and a certified pole-order bound.
struct VElement {
  WLaurent series;
  long weight = 0;
  long pole_order = 0;
};

/// J_n with p = e^w. J_1 carries the exact quotient e^w / (e^w - 1).
WLaurent deformed_eisenstein_w(long n, long wtrunc, GridExp qtrunc);

/// Which Laurent expansion of p / (p - 1) the Fourier form of J_1 uses:
/// inner = -sum_{k>=1} p^k (|p| < 1), outer = sum_{k>=0} p^-k (|p| > 1).
enum class PExpansion { inner, outer };

/// J_n as a (p, q) expansion. J_1 is windowed to |r| <= window (integer p
/// powers); J_n for n >= 2 has finite support per q-order and no window.
PQSeries deformed_eisenstein_fourier(long n, GridExp qtrunc, long window,
                                     PExpansion expansion = PExpansion::inner);

/// sum_k (-1)^(n+k) C(n, k) J_k J_1^(n-k) from given J_0 .. J_n.
WLaurent completion_from_j(const std::vector<WLaurent>& j, long n);
/// completion_from_j with freshly built J_k.
WLaurent completion_K_explicit(long n, long wtrunc, GridExp qtrunc);
/// K_n = J_n - J_1^n - sum_{j=2}^{n-1} C(n, j) K_j J_1^(n-j).
WLaurent completion_K_recursive(long n, long wtrunc, GridExp qtrunc);
/// K_n of weight n and pole order n; RouteMismatch if the two forms disagree.
VElement completion_K(long n, long wtrunc, GridExp qtrunc);

/// wp = 1/w^2 - sum_{n>=1} (2n+1) B_{2n+2} / (2n+2)! E_{2n+2} w^(2n).
VElement weierstrass_p(long wtrunc, GridExp qtrunc);

/// J_{i,n} (i = 2, 3, 4) from its definition through J_n at rescaled z and tau.
WLaurent theta_variant_definition(int i, long n, long wtrunc, GridExp qtrunc);
/// J_{i,n} from its closed double sum.
WLaurent theta_variant_concrete(int i, long n, long wtrunc, GridExp qtrunc);
/// Closed form, checked against the definition (RouteMismatch).
WLaurent deformed_eisenstein_theta_variant(int i, long n, long wtrunc, GridExp qtrunc);
/// Closed form of J_{i,n} as a (p, q) expansion; J_{2,1} is windowed.
PQSeries theta_variant_fourier(int i, long n, GridExp qtrunc, long window);

/// f = sum_d c_d K_d with K_0 = 1 and modular coefficients c_d.
struct KDecomposition {
  /// Coefficient of K_d at index d (index 1 unused).
  std::vector<QExp> coefficients;
  std::vector<ModularFit> fits;
  /// First w-coefficient of the remainder that does not vanish.
  std::optional<WPoint> residual;
  bool consistent = false;
};

/// Peels the principal part of f with K_pole_order, ..., K_2 and checks that
/// what remains is a w-independent modular form of weight f.weight.
KDecomposition decompose_in_k_basis(const VElement& f);

}  // namespace jacobi
