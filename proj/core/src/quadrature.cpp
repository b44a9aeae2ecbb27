#include "qgamma/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qg {

namespace {

// Require the geometric-tail criterion to hold on a short run of
// consecutive terms before stopping, so a single accidentally small term
// (an integrand zero, say) cannot truncate the sum early.
constexpr int kConsecutiveOk = 3;
constexpr std::int64_t kMinTerms = 8;
// Consecutive growing terms after which a bilateral tail is declared
// divergent.
constexpr int kGrowPatience = 24;

void require_integrand(const Integrand& f, const char* fn) {
    if (!f) {
        throw DomainError(std::string(fn) + ": integrand is empty");
    }
}

struct DirectionalSum {
    double sum = 0.0;           // sum of f(q^n) q^n over the scanned arm
    double tail = 0.0;          // tail bound in the same (unscaled) units
    std::int64_t terms = 0;
    bool converged = false;
    bool diverged = false;
};

// Scan one arm of the bilateral lattice: n = n_from, n_from+step, ... up to
// and including n_to (step is +1 or -1). Shares the stopping rules of the
// one-sided integral plus growth monitoring for the divergent case.
DirectionalSum scan_arm(const Integrand& f, const QParam& q,
                        const SeriesPolicy& policy, std::int64_t n_from,
                        std::int64_t n_to, int step,
                        std::int64_t terms_budget) {
    DirectionalSum out;
    const double qq = q.q();
    const double tail_factor = qq / q.one_minus_q();
    detail::KahanSum sum;
    int ok_run = 0;
    int grow_run = 0;
    double prev_mag = -1.0;
    std::int64_t n = n_from;
    for (std::int64_t count = 0;; ++count) {
        if (step > 0 ? n > n_to : n < n_to) {
            // Window exhausted with the tail still above tolerance: report
            // the partial sum as unconverged rather than throwing.
            out.sum = sum.value();
            return out;
        }
        if (count >= terms_budget) {
            throw ConvergenceError("jackson_integral_0inf: max_terms exhausted",
                                   q.one_minus_q() * sum.value(), count);
        }
        const double t = q.pow(static_cast<double>(n));
        const double fv = f(t);
        if (!std::isfinite(fv)) {
            throw EvaluationError(
                "jackson_integral_0inf: integrand returned a non-finite value",
                n, t);
        }
        const double term = fv * t; // f(q^n) * q^n
        sum.add(term);
        out.terms = count + 1;
        const double mag = std::abs(term);
        const double s = std::abs(sum.value());
        out.tail = mag * tail_factor;
        const bool small = out.tail <= policy.rel_tol * s ||
                           (mag <= policy.underflow_floor && s <= policy.underflow_floor) ||
                           mag == 0.0;
        ok_run = small ? ok_run + 1 : 0;
        grow_run = (prev_mag >= 0.0 && mag > prev_mag) ? grow_run + 1 : 0;
        prev_mag = mag;
        if (ok_run >= kConsecutiveOk && count + 1 >= kMinTerms) {
            out.sum = sum.value();
            out.converged = true;
            return out;
        }
        if (grow_run >= kGrowPatience) {
            out.sum = sum.value();
            out.diverged = true;
            out.tail = std::numeric_limits<double>::infinity();
            return out;
        }
        n += step;
    }
}

} // namespace

bool QIntegralResult::diverged() const noexcept {
    return !converged && std::isinf(tail_estimate);
}

QIntegralResult jackson_integral_0a(const Integrand& f, double a,
                                    const QParam& q,
                                    const SeriesPolicy& policy) {
    policy.validate();
    require_integrand(f, "jackson_integral_0a");
    if (!std::isfinite(a) || !(a > 0.0)) {
        throw DomainError("jackson_integral_0a: a must be finite and > 0");
    }
    const double qq = q.q();
    const double scale = q.one_minus_q() * a;
    const double tail_factor = qq / q.one_minus_q();
    detail::KahanSum sum;
    double qn = 1.0; // q^n
    int ok_run = 0;
    QIntegralResult out;
    for (std::int64_t n = 0; n < policy.max_terms; ++n) {
        const double t = a * qn;
        const double fv = f(t);
        if (!std::isfinite(fv)) {
            throw EvaluationError(
                "jackson_integral_0a: integrand returned a non-finite value", n,
                t);
        }
        const double term = fv * qn;
        sum.add(term);
        out.terms_used = n + 1;
        const double mag = std::abs(term);
        const double s = std::abs(sum.value());
        const double tail = mag * tail_factor;
        const bool small = tail <= policy.rel_tol * s ||
                           (mag <= policy.underflow_floor && s <= policy.underflow_floor) ||
                           mag == 0.0;
        ok_run = small ? ok_run + 1 : 0;
        if (ok_run >= kConsecutiveOk && n + 1 >= kMinTerms) {
            out.value = scale * sum.value();
            out.tail_estimate = scale * tail;
            out.converged = true;
            return out;
        }
        // Periodic refresh kills multiplicative drift on long runs.
        if ((n & 255) == 255) {
            qn = q.pow(static_cast<double>(n + 1));
        } else {
            qn *= qq;
        }
    }
    throw ConvergenceError("jackson_integral_0a: max_terms exhausted",
                           scale * sum.value(), policy.max_terms);
}

std::pair<std::int64_t, std::int64_t> bilateral_window(const QParam& q,
                                                       const SeriesPolicy& policy) {
    policy.validate();
    const double floor_log =
        std::log(policy.underflow_floor > 0.0 ? policy.underflow_floor : 1e-300);
    const auto n_depth =
        static_cast<std::int64_t>(std::ceil(floor_log / q.ln_q()));
    // A few slots beyond the q^{n_max} < rel_tol point so the
    // consecutive-small-terms confirmation can trigger inside the window.
    const auto n_max =
        static_cast<std::int64_t>(
            std::ceil(std::log(policy.rel_tol) / q.ln_q())) +
        kConsecutiveOk + 1;
    return {-n_depth, n_max};
}

QIntegralResult jackson_integral_0inf(const Integrand& f, const QParam& q,
                                      const SeriesPolicy& policy,
                                      std::int64_t n_min, std::int64_t n_max) {
    policy.validate();
    require_integrand(f, "jackson_integral_0inf");
    if (n_min > 0 || n_max < 0) {
        throw DomainError(
            "jackson_integral_0inf: window must contain n = 0 (n_min <= 0 <= n_max)");
    }
    // Scan outward from n = 0 in both directions so the tail monitors trip
    // before the lattice reaches extreme magnitudes.
    const DirectionalSum pos =
        scan_arm(f, q, policy, 0, n_max, +1, policy.max_terms);
    const DirectionalSum neg =
        scan_arm(f, q, policy, -1, n_min, -1, policy.max_terms - pos.terms);
    QIntegralResult out;
    out.value = q.one_minus_q() * (pos.sum + neg.sum);
    out.terms_used = pos.terms + neg.terms;
    out.converged = pos.converged && neg.converged;
    if (pos.diverged || neg.diverged) {
        out.converged = false;
        out.tail_estimate = std::numeric_limits<double>::infinity();
    } else {
        out.tail_estimate = q.one_minus_q() * (pos.tail + neg.tail);
    }
    return out;
}

QIntegralResult jackson_integral_0inf(const Integrand& f, const QParam& q,
                                      const SeriesPolicy& policy) {
    const auto window = bilateral_window(q, policy);
    return jackson_integral_0inf(f, q, policy, window.first, window.second);
}

QIntegralResult jackson_integral_ab(const Integrand& f, double a, double b,
                                    const QParam& q,
                                    const SeriesPolicy& policy) {
    policy.validate();
    require_integrand(f, "jackson_integral_ab");
    if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0) {
        throw DomainError("jackson_integral_ab: requires a >= 0 and b >= 0");
    }
    QIntegralResult out;
    if (a == b) {
        out.converged = true;
        return out; // identical sub-integrals cancel exactly
    }
    QIntegralResult upper_part;
    upper_part.converged = true;
    QIntegralResult lower_part;
    lower_part.converged = true;
    if (b > 0.0) upper_part = jackson_integral_0a(f, b, q, policy);
    if (a > 0.0) lower_part = jackson_integral_0a(f, a, q, policy);
    out.value = upper_part.value - lower_part.value;
    out.terms_used = upper_part.terms_used + lower_part.terms_used;
    out.converged = upper_part.converged && lower_part.converged;
    out.tail_estimate = upper_part.tail_estimate + lower_part.tail_estimate;
    return out;
}

BoundPoint holder_check(const Integrand& f, const Integrand& g, double a_exp,
                        const QParam& q, double upper,
                        const SeriesPolicy& policy) {
    policy.validate();
    require_integrand(f, "holder_check");
    require_integrand(g, "holder_check");
    if (!std::isfinite(a_exp) || !(a_exp > 1.0)) {
        throw DomainError("holder_check: a_exp must be finite and > 1");
    }
    if (!std::isfinite(upper) || !(upper > 0.0)) {
        throw DomainError("holder_check: upper must be finite and > 0");
    }
    const double b_exp = a_exp / (a_exp - 1.0);
    auto checked = [](const Integrand& h, double t, const char* which) {
        const double v = h(t);
        if (v < 0.0) {
            throw DomainError(std::string("holder_check: ") + which +
                              " is negative at t = " + std::to_string(t));
        }
        return v;
    };
    const auto fg = [&](double t) {
        return checked(f, t, "f") * checked(g, t, "g");
    };
    const auto fa = [&](double t) {
        return std::pow(checked(f, t, "f"), a_exp);
    };
    const auto gb = [&](double t) {
        return std::pow(checked(g, t, "g"), b_exp);
    };
    const QIntegralResult int_fa = jackson_integral_0a(fa, upper, q, policy);
    const QIntegralResult int_gb = jackson_integral_0a(gb, upper, q, policy);
    const QIntegralResult int_fg = jackson_integral_0a(fg, upper, q, policy);
    const double left = int_fg.value;
    const double right =
        std::pow(int_fa.value, 1.0 / a_exp) * std::pow(int_gb.value, 1.0 / b_exp);
    BoundPoint p;
    p.lower = 0.0;
    p.mid = left;
    p.upper = right;
    double scale = std::max(right, std::abs(left));
    if (!(scale > 0.0)) scale = 1.0;
    p.lower_margin = left / scale;
    p.upper_margin = (right - left) / scale;
    return p;
}

} // namespace qg
