#include "qgamma/special.hpp"

#include "qgamma/qcore.hpp"
#include "qgamma/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qg {

namespace {

void require_positive_x(double x, const char* fn) {
    if (!std::isfinite(x) || !(x > 0.0)) {
        throw DomainError(std::string(fn) + ": x must be finite and > 0, got " +
                          std::to_string(x));
    }
}

// Series truncation indices grow like ln(tol)/ln(q); cap q so worst-case
// runtime stays bounded (see special.hpp).
constexpr double kMaxSeriesQ = 1.0 - 1e-6;

void require_series_q(const QParam& q, const char* fn) {
    if (q.q() > kMaxSeriesQ) {
        throw DomainError(std::string(fn) +
                          ": q-special series support q <= 1 - 1e-6, got " +
                          std::to_string(q.q()));
    }
}

// Threshold beyond which exp((1 - x) * log(1 - q)) overflows a double.
constexpr double kExpOverflow = 709.0;

} // namespace

double qgamma_log_ratio_series(double u, double v, const QParam& q,
                               const SeriesPolicy& policy) {
    policy.validate();
    require_positive_x(u, "qgamma_log_ratio_series");
    require_positive_x(v, "qgamma_log_ratio_series");
    require_series_q(q, "qgamma_log_ratio_series");
    if (u == v) {
        return 0.0;
    }
    // S(u, v) = sum_{n >= 0} [log1p(-q^{n+v}) - log1p(-q^{n+u})].
    // All terms share the sign of (u - v); no cancellation occurs between
    // terms, so a relative-tolerance stop on the running sum is sound.
    double pu = q.pow(u); // q^{n+u}
    double pv = q.pow(v); // q^{n+v}
    detail::KahanSum sum;
    const double tail_denom = q.one_minus_q();
    for (std::int64_t n = 0; n < policy.max_terms; ++n) {
        sum.add(std::log1p(-pv) - std::log1p(-pu));
        // Advance to the next lattice point before bounding the tail: the
        // bound |S tail| <= |pu - pv| / ((1-q)(1-max(pu,pv))) uses the
        // NEXT-step magnitudes.
        if ((n & 255) == 255) {
            pu = q.pow(static_cast<double>(n + 1) + u);
            pv = q.pow(static_cast<double>(n + 1) + v);
        } else {
            pu *= q.q();
            pv *= q.q();
        }
        const double pmax = pu > pv ? pu : pv;
        if (pmax < 1.0) {
            const double tail =
                std::abs(pu - pv) / (tail_denom * (1.0 - pmax));
            if (tail <= policy.rel_tol * std::abs(sum.value())) {
                return sum.value();
            }
        }
    }
    throw ConvergenceError("qgamma_log_ratio_series: max_terms exhausted",
                           sum.value(), policy.max_terms);
}

double log_qgamma_diff(double u, double v, const QParam& q,
                       const SeriesPolicy& policy) {
    return (v - u) * std::log(q.one_minus_q()) +
           qgamma_log_ratio_series(u, v, q, policy);
}

double log_qgamma(double x, const QParam& q, const SeriesPolicy& policy,
                  QGammaBackend backend) {
    policy.validate();
    require_positive_x(x, "log_qgamma");
    require_series_q(q, "log_qgamma");
    if (backend == QGammaBackend::Product) {
        return (1.0 - x) * std::log(q.one_minus_q()) +
               qgamma_log_ratio_series(x, 1.0, q, policy);
    }
    // Series form of the q-integral representation:
    //   Gamma_q(x) = (1-q)^{1-x} * sum_{n>=0} q^{n x} * prod_{k>n}(1-q^k),
    // evaluated with the infinite product peeled off recursively.
    double p = q_pochhammer_inf(q.q(), q); // prod_{k>=1} (1 - q^k)
    detail::KahanSum sum;
    double qnx = 1.0; // q^{n x}
    const double qx = q.pow(x);
    for (std::int64_t n = 0; n < policy.max_terms; ++n) {
        sum.add(qnx * p);
        p /= (1.0 - q.pow(static_cast<double>(n + 1)));
        if ((n & 255) == 255) {
            qnx = q.pow(static_cast<double>(n + 1) * x);
        } else {
            qnx *= qx;
        }
        // p is increasing toward 1 and below 1/(q;q)_inf; the remaining sum
        // is bounded by q^{(n+1)x} / (1 - q^x) with the current p factored
        // through as <= 1 after normalization by the partial sum.
        const double tail = qnx / (1.0 - qx);
        if (tail <= policy.rel_tol * sum.value()) {
            return (1.0 - x) * std::log(q.one_minus_q()) +
                   std::log(sum.value());
        }
    }
    throw ConvergenceError("log_qgamma: max_terms exhausted (integral backend)",
                           std::log(sum.value()), policy.max_terms);
}

double qgamma(double x, const QParam& q, const SeriesPolicy& policy,
              QGammaBackend backend) {
    const double lg = log_qgamma(x, q, policy, backend);
    if (lg > kExpOverflow) {
        throw OverflowError("qgamma: value overflows double at x = " +
                            std::to_string(x));
    }
    return std::exp(lg);
}

double qpsi(double x, const QParam& q, const SeriesPolicy& policy,
            QPsiBackend backend) {
    policy.validate();
    require_positive_x(x, "qpsi");
    require_series_q(q, "qpsi");
    // Both backends tighten the internal truncation two orders below the
    // policy tolerance so that results agree to an absolute ~1e-12 even
    // where the total value passes through zero.
    const double tol = 0.01 * policy.rel_tol;
    const double lead = -std::log(q.one_minus_q());
    detail::KahanSum sum;
    if (backend == QPsiBackend::DirectSeries) {
        // sum_{n>=0} q^{n+x} / (1 - q^{n+x})
        double p = q.pow(x);
        for (std::int64_t n = 0; n < policy.max_terms; ++n) {
            sum.add(p / (1.0 - p));
            if ((n & 255) == 255) {
                p = q.pow(static_cast<double>(n + 1) + x);
            } else {
                p *= q.q();
            }
            const double tail = p / (q.one_minus_q() * (1.0 - p));
            if (tail <= tol * sum.value() || tail < policy.underflow_floor) {
                return lead + q.ln_q() * sum.value();
            }
        }
        throw ConvergenceError("qpsi: max_terms exhausted (direct backend)",
                               lead + q.ln_q() * sum.value(),
                               policy.max_terms);
    }
    // Lambert form: sum_{k>=1} q^{k x} / (1 - q^k).
    const double qx = q.pow(x);
    double pk = qx;  // q^{k x}
    double qk = q.q(); // q^k
    for (std::int64_t k = 1; k <= policy.max_terms; ++k) {
        sum.add(pk / (1.0 - qk));
        if ((k & 255) == 255) {
            pk = q.pow(static_cast<double>(k + 1) * x);
            qk = q.pow(static_cast<double>(k + 1));
        } else {
            pk *= qx;
            qk *= q.q();
        }
        const double tail = pk / ((1.0 - qx) * q.one_minus_q());
        if (tail <= tol * sum.value() || tail < policy.underflow_floor) {
            return lead + q.ln_q() * sum.value();
        }
    }
    throw ConvergenceError("qpsi: max_terms exhausted (Lambert backend)",
                           lead + q.ln_q() * sum.value(), policy.max_terms);
}

double psi_exp_moment(double x, const QParam& q) {
    require_positive_x(x, "psi_exp_moment");
    // -q^x ln q / (1 - q^x) = ln q * e^e / expm1(e) with e = x ln q < 0;
    // expm1 keeps the denominator exact as the exponent approaches zero.
    const double e = x * q.ln_q();
    return q.ln_q() * std::exp(e) / std::expm1(e);
}

double pi_q(const QParam& q, const SeriesPolicy& policy) {
    const double g = qgamma(0.5, q, policy);
    return g * g;
}

double pi_q_formula_variant(const QParam& q, const SeriesPolicy& policy) {
    const QParam q2(q.q() * q.q());
    const double g = qgamma(0.5, q2, policy);
    return std::pow(q.q(), 0.25) * g * g;
}

double classical_lgamma(double x) {
    require_positive_x(x, "classical_lgamma");
    if (x < 0.5) {
        // lgamma(x) = lgamma(x + 1) - ln x; avoids the Lanczos shift's loss
        // of accuracy near zero.
        return classical_lgamma(x + 1.0) - std::log(x);
    }
    // Lanczos approximation, g = 7, n = 9.
    static const double c[9] = {
        0.99999999999980993,      676.5203681218851,
        -1259.1392167224028,      771.32342877765313,
        -176.61502916214059,      12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6,
        1.5056327351493116e-7};
    const double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i) {
        a += c[i] / (z + static_cast<double>(i));
    }
    const double t = z + 7.5;
    constexpr double half_ln_2pi = 0.91893853320467274178;
    return half_ln_2pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

double classical_gamma(double x) {
    const double lg = classical_lgamma(x);
    if (lg > kExpOverflow) {
        throw OverflowError("classical_gamma: value overflows double at x = " +
                            std::to_string(x));
    }
    return std::exp(lg);
}

double classical_psi(double x) {
    require_positive_x(x, "classical_psi");
    // Shift into the asymptotic regime, then apply the Bernoulli expansion
    // psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k}).
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv2 * (1.0 / 12.0 +
                inv2 * (-1.0 / 120.0 +
                        inv2 * (1.0 / 252.0 +
                                inv2 * (-1.0 / 240.0 +
                                        inv2 * (1.0 / 132.0 +
                                                inv2 * (-691.0 / 32760.0 +
                                                        inv2 * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

} // namespace qg
