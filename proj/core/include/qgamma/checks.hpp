#pragma once

#include <cstdint>
#include <vector>

#include "qgamma/grid.hpp"
#include "qgamma/policy.hpp"
#include "qgamma/qparam.hpp"
#include "qgamma/report.hpp"

namespace qg {

/// Default grids / parameter sets used by the verification suites and the
/// CLI when the caller does not override them.
namespace defaults {

GridSpec x_grid();          ///< log [0.01, 100] x 400 (x > 0 claims)
GridSpec unit_grid();       ///< linear (0.001, 0.999) x 500 ((0,1) claims)
GridSpec monotone_grid();   ///< log [0.01, 200] x 400 (asymptotic tails)
GridSpec qi_grid();         ///< log [0.01, 100] x 200
GridSpec phi_grid();        ///< log [1e-6, 50] x 300 (t > 0 claims)
std::vector<double> q_set();///< {0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}

/// Uniform relative slack applied to weak-inequality margins.
inline constexpr double slack = 1e-10;
/// Interior strictness floor for strict inequalities.
inline constexpr double strictness_floor = 1e-13;

} // namespace defaults

/// Wendel-type two-sided bound for the q-gamma ratio, s in (0,1):
///   ([x]_q/[x+s]_q)^{1-s} <= Gamma_q(x+s)/([x]_q^s Gamma_q(x)) <= 1.
/// Margins are computed in the log domain through the fused ratio kernel,
/// so they stay meaningful (relative accuracy) even when both sides are
/// within 1e-60 of each other at large x.
BoundReport check_q_wendel(const QParam& q, double s, const GridSpec& grid,
                           const SeriesPolicy& policy = {});

/// Sandor-type two-sided bound:
///   sqrt([x]_q) <= Gamma_q(x+1)/Gamma_q(x+1/2) <= sqrt([x+1/2]_q).
BoundReport check_q_sandor(const QParam& q, const GridSpec& grid,
                           const SeriesPolicy& policy = {});

/// Strict two-sided bound on (0,1):
///   1/sqrt(pi_q) < Gamma_q(x+1)/Gamma_q(x+1/2) < (1+sqrt(q))/sqrt(pi_q).
/// Weak margins use the uniform slack; interior points (away from the two
/// grid ends) must additionally clear defaults::strictness_floor.
BoundReport check_theorem2(const QParam& q, const GridSpec& grid,
                           const SeriesPolicy& policy = {});

/// F(x) = [x]_q^{-1/2} Gamma_q(x+1)/Gamma_q(x+1/2): strictly decreasing,
/// F > 1, F -> 1 as x -> inf. Per-point slots: lower = 1 (limit bound,
/// lower_margin = ln F), upper = previous point's mid (ordering,
/// upper_margin = ln F_{i-1} - ln F_i; index 0 exempt, stored 0).
BoundReport check_monotone_F(const QParam& q, const GridSpec& grid,
                             const SeriesPolicy& policy = {});

/// G(x) = [x+1/2]_q^{-1/2} Gamma_q(x+1)/Gamma_q(x+1/2): strictly
/// increasing, G < 1, G -> 1. Mirrored slot conventions (upper = 1).
BoundReport check_monotone_G(const QParam& q, const GridSpec& grid,
                             const SeriesPolicy& policy = {});

/// H(x) = sqrt(pi_q) Gamma_q(x+1)/Gamma_q(x+1/2) on (0,1): strictly
/// increasing from 1 toward 1+sqrt(q). Slots: lower = 1, upper = 1+sqrt(q)
/// with their log margins; ordering failures are recorded as "ordering"
/// violations.
BoundReport check_monotone_H(const QParam& q, const GridSpec& grid,
                             const SeriesPolicy& policy = {});

/// Asymptotic claims, probed at x_probe and 2*x_probe each:
///   wendel_ratio:  Gamma_q(x+alpha)/([x]_q^alpha Gamma_q(x))        -> 1
///   ratio2:        [x]_q^{beta-alpha} Gamma_q(x+alpha)/Gamma_q(x+beta) -> 1
/// Thresholds are derived from the q^x deviation scale. alpha plays the
/// role of s in the first expression. alpha, beta in (0,1).
LimitReport check_wendel_limits(const QParam& q, double alpha, double beta,
                                double x_probe,
                                const SeriesPolicy& policy = {});

/// Qi-type psi difference bound:
///   psi_q(x+1) - psi_q(x+1/2) >= (1/2) * psi_exp_moment(x+1/2),
/// i.e. >= -(1/2) q^{x+1/2} ln q / (1 - q^{x+1/2}). Margin is the plain
/// difference LHS - RHS (both sides -> 0 as x grows).
BoundReport check_qi_psi_bound(const QParam& q, const GridSpec& grid,
                               const SeriesPolicy& policy = {});

/// phi(t) = e^{-t/2} - e^{-t}/2 - 1/2 < 0 strictly for t > 0 (equality
/// only at t = 0, checked separately). No q dependence.
BoundReport check_phi_negative(const GridSpec& t_grid);

/// Classical (q = 1) anchors evaluated with the reference gamma:
///   2 Gamma(n+1/2) <= Gamma(1/2) Gamma(n+1) <= 2^n Gamma(n+1/2), n=1..20;
///   Wendel (x/(x+s))^{1-s} <= Gamma(x+s)/(x^s Gamma(x)) <= 1 at s = 1/2;
///   Sandor sqrt(x) <= Gamma(x+1)/Gamma(x+1/2) <= sqrt(x+1/2);
/// all on the given x-grid (the integer family on n = 1..20 regardless).
BoundReport check_classical_inequalities(const GridSpec& grid);

/// Which sharpness claim to probe.
enum class SharpnessTarget { Sandor, Theorem2 };

/// Sandor: both relative gaps (mid/lower - 1 and 1 - mid/upper) at the
/// largest grid point, asserting decay along the tail of the grid;
/// threshold 1e-6 is calibrated for q = 0.5 with the grid reaching x=200.
/// Theorem2: endpoint margins at the first/last grid points, asserting
/// they shrink as each endpoint is approached; threshold 1e-2. Both
/// thresholds are empirical (no rate is claimed), noted in the report.
SharpnessReport sharpness_report(const QParam& q, SharpnessTarget which,
                                 const GridSpec& grid,
                                 const SeriesPolicy& policy = {});

/// Hoelder-inequality suite over Jackson integrals on [0, 1/(1-q)]:
/// point 0 is the equality case f = g = 1 (margin 0 within 1e-14), point 1
/// is the Gamma-splitting step f = t^{(1-s)(x-1)} (E_q^{-qt})^{1-s},
/// g = t^{sx} (E_q^{-qt})^s with s = 0.5, x = 1.5, and the remaining
/// `trials` points are seeded random piecewise-positive integrands with
/// a_exp cycling {1.5, 2, 3}. BoundPoint.x holds the trial index.
BoundReport check_holder_suite(const QParam& q, std::int64_t trials,
                               std::uint64_t seed,
                               const SeriesPolicy& policy = {});

} // namespace qg
