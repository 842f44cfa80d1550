#pragma once

#include <map>
#include <string>
#include <vector>

#include "jacobi/jacobi_operators.hpp"
#include "jacobi/pq_series.hpp"
#include "jacobi/report.hpp"
#include "jacobi/w_laurent.hpp"

namespace jacobi {

struct SuiteConfig {
  /// q-truncation in grid numerators (qmax * 24).
  GridExp qtrunc = 10 * QExp::kGrid;
  long wtrunc = 16;
  /// p-window for windowed Fourier expansions, in integer p-powers.
  long window = 10;
  long nmax = 8;
  long variant_nmax = 6;
  /// q-order the classical Ramanujan equations are checked to.
  long classical_order = 20;
};

/// 2 floor(sqrt(4 qmax + 1)) + 4.
long default_wmax(const Rational& qmax);
/// Validated configuration; DomainError on qmax <= 0 or off-grid, wmax < 2,
/// window < 1 or nmax < 1.
SuiteConfig make_config(const Rational& qmax, std::optional<long> wmax = std::nullopt,
                        std::optional<long> window = std::nullopt, std::optional<long> nmax = std::nullopt);

struct RelationsContext {
  SuiteConfig config;
  /// J_0 .. J_{nmax+1} in the w-layer.
  std::vector<WLaurent> j;
  WLaurent wp;
  /// J_0 .. J_3 as Fourier expansions, J_1 in its outer expansion.
  std::vector<PQSeries> j_fourier;
};
RelationsContext make_relations_context(const SuiteConfig& config);
Report run_relations_checks(const RelationsContext& ctx);

struct KStructureContext {
  SuiteConfig config;
  /// Index n holds K_n (n = 2 .. 6) from the explicit formula.
  std::map<long, WLaurent> k;
  std::map<long, WLaurent> k_recursive;
};
KStructureContext make_kstructure_context(const SuiteConfig& config);
Report run_kstructure_checks(const KStructureContext& ctx);

struct RamanujanContext {
  SuiteConfig config;
  JacobiForm e21;
  JacobiForm e41;
  JacobiForm e61;
  JacobiForm phi_m2;
  JacobiForm phi_0;
};
RamanujanContext make_ramanujan_context(const SuiteConfig& config);
Report run_ramanujan_checks(const RamanujanContext& ctx);

struct ThetaContext {
  SuiteConfig config;
  /// theta_1 .. theta_4 at index 1 .. 4, with the extra q-precision kThetaPad.
  std::vector<PQSeries> theta;
  /// J_0 .. J_nmax in the w-layer.
  std::vector<WLaurent> j;
  /// variant[i][n]: closed form of J_{i,n}, i = 2 .. 4.
  std::map<int, std::map<long, WLaurent>> variant;
};
ThetaContext make_theta_context(const SuiteConfig& config);
Report run_theta_checks(const ThetaContext& ctx);

struct ShiftsContext {
  SuiteConfig config;
  /// J_0 .. J_{variant_nmax} as windowed Fourier expansions (inner J_1).
  std::vector<PQSeries> j_fourier;
  std::map<int, std::map<long, PQSeries>> variant_fourier;
};
ShiftsContext make_shifts_context(const SuiteConfig& config);
Report run_shifts_checks(const ShiftsContext& ctx);

struct CorollaryContext {
  SuiteConfig config;
  PQSeries theta1;
  std::vector<WLaurent> j;
};
CorollaryContext make_corollary_context(const SuiteConfig& config);
Report run_corollary_checks(const CorollaryContext& ctx);

struct EllipticContext {
  SuiteConfig config;
  /// The index-1 forms by name: phi_{-2,1}, phi_{0,1}, E_{4,1}, E_{6,1}, E_{2,1}.
  std::vector<std::pair<std::string, JacobiForm>> forms;
  PQSeries theta1;
};
EllipticContext make_elliptic_context(const SuiteConfig& config);
Report run_elliptic_checks(const EllipticContext& ctx);

/// relations, kstructure, ramanujan, theta, shifts, corollary, elliptic, all.
const std::vector<std::string>& suite_names();
/// DomainError for an unknown name.
Report run_suite(const std::string& name, const SuiteConfig& config);

/// c(n, r) for n = 0 .. nmax and r = -rmax .. rmax.
std::vector<std::vector<Rational>> fourier_table(const PQSeries& f, long nmax, long rmax);

}  // namespace jacobi
