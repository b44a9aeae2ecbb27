#pragma once

#include "qgamma/policy.hpp"
#include "qgamma/qparam.hpp"

namespace qg {

/// How to evaluate the q-gamma function.
enum class QGammaBackend {
    Product,          ///< infinite-product / log-series form (default)
    JacksonIntegral,  ///< q-integral representation (cross-check backend)
};

/// How to evaluate the q-psi (logarithmic derivative) function.
enum class QPsiBackend {
    DirectSeries,   ///< sum over n of q^{n+x}/(1-q^{n+x}) (default)
    LambertSeries,  ///< sum over k >= 1 of q^{kx}/(1-q^k)
};

/// log Gamma_q(x) for x > 0, q in (0,1):
///   (1-x) ln(1-q) + sum_{n>=0} [ log1p(-q^{n+1}) - log1p(-q^{n+x}) ].
/// Throws DomainError for x <= 0 or non-finite x.
///
/// All series-based functions in this header (gamma, psi, pi_q families)
/// support q up to 1 - 1e-6 and throw DomainError beyond: truncation
/// lengths grow like ln(tol)/ln(q), so the cap keeps worst-case runtime
/// bounded (~3e7 terms) instead of unbounded as q -> 1.
double log_qgamma(double x, const QParam& q,
                  const SeriesPolicy& policy = {},
                  QGammaBackend backend = QGammaBackend::Product);

/// Gamma_q(x) = exp(log_qgamma). Throws OverflowError if the result
/// overflows double range.
double qgamma(double x, const QParam& q,
              const SeriesPolicy& policy = {},
              QGammaBackend backend = QGammaBackend::Product);

/// Fused log-ratio kernel
///   S(u, v) = sum_{n>=0} [ log1p(-q^{n+v}) - log1p(-q^{n+u}) ]
///           = ln Gamma_q(u) - ln Gamma_q(v) - (v-u) ln(1-q).
/// Each term is formed before accumulation, so the result keeps full
/// relative precision even when it is ~q^min(u,v), far below the rounding
/// noise of subtracting two log_qgamma calls. Requires u, v > 0.
double qgamma_log_ratio_series(double u, double v, const QParam& q,
                               const SeriesPolicy& policy = {});

/// ln Gamma_q(u) - ln Gamma_q(v), computed through the fused kernel.
double log_qgamma_diff(double u, double v, const QParam& q,
                       const SeriesPolicy& policy = {});

/// psi_q(x) = d/dx ln Gamma_q(x) for x > 0:
///   -ln(1-q) + ln q * sum_{n>=0} q^{n+x}/(1-q^{n+x})   (DirectSeries)
///   -ln(1-q) + ln q * sum_{k>=1} q^{kx}/(1-q^k)        (LambertSeries)
double qpsi(double x, const QParam& q,
            const SeriesPolicy& policy = {},
            QPsiBackend backend = QPsiBackend::DirectSeries);

/// The weight -q^x ln(q) / (1 - q^x): the single-term exponential moment
/// that q-psi bounds are measured against. Equals ln 2 at x=1, q=1/2.
double psi_exp_moment(double x, const QParam& q);

/// pi_q = Gamma_q(1/2)^2, the q-analogue of pi.
double pi_q(const QParam& q, const SeriesPolicy& policy = {});

/// Diagnostic variant of pi_q: q^{1/4} * (Gamma_{q^2}(1/2))^2, one literal
/// reading of the circulated factorial-form closed expression. It does NOT
/// reproduce Gamma_q(1/2)^2 (at q = 1/2 it gives ~1.6996 vs pi_q ~2.4712);
/// exposed for comparison only, no equality is asserted.
double pi_q_formula_variant(const QParam& q, const SeriesPolicy& policy = {});

/// Classical references (independent of std::lgamma/std::tgamma so the
/// q->1 comparisons do not test the library against itself).
/// Lanczos (g = 7, 9 terms) log-gamma for x > 0.
double classical_lgamma(double x);
/// exp(classical_lgamma); OverflowError on overflow.
double classical_gamma(double x);
/// Digamma via recurrence shift to x >= 10 plus asymptotic series.
double classical_psi(double x);

} // namespace qg
