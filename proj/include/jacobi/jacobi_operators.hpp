#pragma once

#include "jacobi/deformed_eisenstein.hpp"
#include "jacobi/pq_series.hpp"
#include "jacobi/qexp.hpp"
#include "jacobi/w_laurent.hpp"

namespace jacobi {

enum class FormKind { holomorphic, weak, quasi };

struct JacobiForm {
  PQSeries fourier;
  long weight = 0;
  long index = 0;
  FormKind kind = FormKind::holomorphic;
};

/// Support mode used to reconstruct forms of this kind.
SupportMode support_mode(FormKind kind);

/// f' - (k/12) E_2 f.
QExp serre_modular(const QExp& f, long weight);

enum class VOperator { dz, dtau, mul_k };

/// D_z = d/dw, D_tau = f' - J_1 f^. - (k/12) E_2 f, or multiplication by
/// K_i. Weight and pole order grow by 1, 2 and i respectively.
VElement v_operator(const VElement& f, VOperator op, long i = 2);

/// 2n D_tau - D_z^2 + n(n-1) K_2 with n = 2m, applied to F / phi^m.
JacobiForm heat_operator(const JacobiForm& f);

/// D_tau + n K_2 with n = 2m, applied to F / phi^m. Also checks the value at
/// z = 0 against t_tau_restriction (RouteMismatch).
JacobiForm t_tau_operator(const JacobiForm& f);

/// T_tau without the z = 0 check.
JacobiForm t_tau_conjugated(const JacobiForm& f);

/// F0' + (m/6 - k/12) E_2 F0 - 2 F2 where F = F0 + F2 w^2 + O(w^4).
QExp t_tau_restriction(const JacobiForm& f);

/// F' - (k/12) E_2 F + (F^.. - J_1 F^. + m J_2 F - (m/6) E_2 F) / (1 - 4m)
/// with k = weight, as given (E_{2,1} is fed through it formally).
JacobiForm jacobi_serre_explicit(const JacobiForm& f, long weight);

/// (T_tau - D_H) / (1 - 4m).
JacobiForm jacobi_serre_conjugated(const JacobiForm& f);

/// Explicit formula, checked against the conjugated route (RouteMismatch).
JacobiForm jacobi_serre(const JacobiForm& f);

/// The index-1 weak generators as JacobiForm values.
JacobiForm phi_form(WeakKind kind, GridExp qtrunc);

/// E_{4,1} or E_{6,1} from the weak generators: c(0,0) = 1, c(0,1) = 0.
JacobiForm eisenstein_jacobi(long weight, GridExp qtrunc);

/// E_{2,1} = phi_{-2,1} (E_2 wp - E_4 / 12).
JacobiForm e21(GridExp qtrunc);

}  // namespace jacobi
