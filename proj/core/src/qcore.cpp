#include "qgamma/qcore.hpp"

#include <cmath>
#include <string>

namespace qg {

namespace {

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": argument must be finite");
    }
}

struct LogProduct {
    double log_abs = 0.0;
    int sign = 1;
    bool zero = false;
};

// Shared core of the infinite Pochhammer product: accumulates
// sum_i log|1 - a q^i|, tracking the (finitely many) negative factors by
// sign. Truncates once |a| q^i < rel_tol * (1-q): the neglected log-tail is
// bounded by the geometric series sum_{j>=i} |a| q^j = |a| q^i / (1-q), and
// the first-order tail estimate -a q^i/(1-q) is folded in so the residual
// is second order in the tolerance.
LogProduct pochhammer_inf_core(double a, const QParam& q,
                               const SeriesPolicy& policy, const char* fn) {
    LogProduct out;
    if (a == 0.0) return out;
    const double qq = q.q();
    const double stop = policy.rel_tol * q.one_minus_q();
    detail::KahanSum log_sum;
    double aqi = a; // a * q^i
    for (std::int64_t i = 0; i < policy.max_terms; ++i) {
        if (std::abs(aqi) < stop) {
            log_sum.add(-aqi / q.one_minus_q());
            out.log_abs = log_sum.value();
            return out;
        }
        const double factor = 1.0 - aqi;
        if (factor == 0.0) {
            out.zero = true;
            return out;
        }
        if (factor < 0.0) {
            out.sign = -out.sign;
            log_sum.add(std::log(-factor));
        } else {
            log_sum.add(std::log1p(-aqi));
        }
        // Periodically recompute a*q^i from scratch so multiplicative
        // rounding drift cannot accumulate over very long runs (q -> 1-).
        if ((i & 255) == 255) {
            aqi = a * q.pow(static_cast<double>(i + 1));
        } else {
            aqi *= qq;
        }
    }
    throw ConvergenceError(std::string(fn) + ": max_terms exhausted",
                           static_cast<double>(out.sign) * std::exp(log_sum.value()),
                           policy.max_terms);
}

} // namespace

double q_bracket(double x, const QParam& q) {
    require_finite(x, "q_bracket");
    return -std::expm1(x * q.ln_q()) / q.one_minus_q();
}

double log_q_bracket(double x, const QParam& q) {
    require_finite(x, "log_q_bracket");
    if (!(x > 0.0)) {
        throw DomainError("log_q_bracket: x must be > 0");
    }
    return std::log1p(-q.pow(x)) - std::log1p(-q.q());
}

double q_pochhammer(double a, const QParam& q, std::int64_t n) {
    require_finite(a, "q_pochhammer");
    if (n < 0) {
        throw DomainError("q_pochhammer: n must be >= 0");
    }
    double result = 1.0;
    double qi = 1.0; // q^i
    for (std::int64_t i = 0; i < n; ++i) {
        result *= 1.0 - a * qi;
        qi *= q.q();
    }
    return result;
}

double q_pochhammer_inf(double a, const QParam& q, const SeriesPolicy& policy) {
    require_finite(a, "q_pochhammer_inf");
    policy.validate();
    const LogProduct p = pochhammer_inf_core(a, q, policy, "q_pochhammer_inf");
    if (p.zero) return 0.0;
    return static_cast<double>(p.sign) * std::exp(p.log_abs);
}

double log_q_pochhammer_inf(double a, const QParam& q,
                            const SeriesPolicy& policy) {
    require_finite(a, "log_q_pochhammer_inf");
    policy.validate();
    if (a >= 1.0) {
        throw DomainError(
            "log_q_pochhammer_inf: requires a < 1 so every factor is positive");
    }
    const LogProduct p = pochhammer_inf_core(a, q, policy, "log_q_pochhammer_inf");
    return p.log_abs;
}

double q_factorial(std::int64_t n, const QParam& q) {
    if (n < 0) {
        throw DomainError("q_factorial: n must be >= 0");
    }
    return q_pochhammer(q.q(), q, n) /
           std::pow(q.one_minus_q(), static_cast<double>(n));
}

double q_exp_E(double t, const QParam& q, const SeriesPolicy& policy) {
    require_finite(t, "q_exp_E");
    if (t == 0.0) return 1.0;
    return q_pochhammer_inf(-q.one_minus_q() * t, q, policy);
}

double q_exp_E_series(double t, const QParam& q, const SeriesPolicy& policy) {
    require_finite(t, "q_exp_E_series");
    policy.validate();
    if (t < 0.0) {
        throw DomainError(
            "q_exp_E_series: series form is unstable for t < 0; use q_exp_E");
    }
    if (t == 0.0) return 1.0;
    // term_{n+1} = term_n * q^n * t / [n+1]_q; all terms positive for t > 0.
    detail::KahanSum sum;
    double term = 1.0; // n = 0
    double qn = 1.0;   // q^n
    sum.add(term);
    for (std::int64_t n = 0; n < policy.max_terms; ++n) {
        const double ratio = qn * t / q_bracket(static_cast<double>(n + 1), q);
        term *= ratio;
        sum.add(term);
        // Later ratios only shrink (q^n decays, [n+1]_q grows), so once the
        // ratio is below 1 the tail is bounded by the geometric series.
        if (ratio < 1.0 &&
            term * ratio / (1.0 - ratio) <= policy.rel_tol * sum.value()) {
            return sum.value();
        }
        qn *= q.q();
    }
    throw ConvergenceError("q_exp_E_series: max_terms exhausted", sum.value(),
                           policy.max_terms);
}

} // namespace qg
