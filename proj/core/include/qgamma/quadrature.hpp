#pragma once

#include <cstdint>
#include <functional>

#include "qgamma/policy.hpp"
#include "qgamma/qparam.hpp"
#include "qgamma/report.hpp"

namespace qg {

/// Outcome of a truncated Jackson q-integral.
struct QIntegralResult {
    double value = 0.0;
    std::int64_t terms_used = 0;
    /// True when the monitored tail(s) dropped below policy.rel_tol * |value|
    /// (or the whole accumulation sat below underflow_floor).
    bool converged = false;
    /// Bound on the neglected tail, in the same units as value. +inf marks a
    /// divergent bilateral sum (growing terms), which is reported here as a
    /// warning rather than thrown.
    double tail_estimate = 0.0;

    /// True when the bilateral tail monitor saw growing terms.
    bool diverged() const noexcept;
};

using Integrand = std::function<double(double)>;

/// Jackson q-integral over [0, a]:
///   (1-q) * a * sum_{n>=0} f(a q^n) q^n,  a > 0.
/// Truncates when the last few |terms| imply a geometric tail below
/// rel_tol * |sum|; throws ConvergenceError if max_terms is exhausted first
/// and EvaluationError if f returns a non-finite value at a sample point.
QIntegralResult jackson_integral_0a(const Integrand& f, double a,
                                    const QParam& q,
                                    const SeriesPolicy& policy = {});

/// Bilateral Jackson q-integral over [0, inf):
///   (1-q) * sum_{n = n_min}^{n_max} f(q^n) q^n,
/// scanning outward from n = 0 with independent tail monitoring at both
/// ends. Convergence requires both tails below tolerance. If either end's
/// terms keep growing the sum is declared divergent: the routine stops
/// early and returns converged=false with tail_estimate=+inf instead of
/// throwing, so callers can inspect the partial value.
QIntegralResult jackson_integral_0inf(const Integrand& f, const QParam& q,
                                      const SeriesPolicy& policy,
                                      std::int64_t n_min, std::int64_t n_max);

/// Same, with the default window n_min = -ceil(ln(underflow_floor)/ln q)
/// mirrored negative and n_max the first index with q^{n_max} < rel_tol.
QIntegralResult jackson_integral_0inf(const Integrand& f, const QParam& q,
                                      const SeriesPolicy& policy = {});

/// Default bilateral window for the given q and policy (n_min, n_max).
std::pair<std::int64_t, std::int64_t>
bilateral_window(const QParam& q, const SeriesPolicy& policy = {});

/// Jackson q-integral over [a, b] = [0,b] minus [0,a]; a = b is exactly 0
/// and a = 0 reduces to the [0,b] form. terms_used sums both parts.
QIntegralResult jackson_integral_ab(const Integrand& f, double a, double b,
                                    const QParam& q,
                                    const SeriesPolicy& policy = {});

/// Numerical Hoelder-inequality check for Jackson integrals over [0, upper]:
///   L = int f g  <=  R = (int f^a_exp)^{1/a_exp} * (int g^b_exp)^{1/b_exp},
/// with the conjugate exponent b_exp = a_exp/(a_exp - 1). Requires
/// a_exp > 1 and f, g >= 0 on the sample set. The returned point stores
/// lower = 0, mid = L, upper = R; margins are relative to max(R, |L|), and
/// the inequality holds when upper_margin >= -1e-10.
BoundPoint holder_check(const Integrand& f, const Integrand& g, double a_exp,
                        const QParam& q, double upper,
                        const SeriesPolicy& policy = {});

} // namespace qg
