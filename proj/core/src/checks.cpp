#include "qgamma/checks.hpp"

#include "qgamma/qcore.hpp"
#include "qgamma/quadrature.hpp"
#include "qgamma/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qg {

namespace defaults {

GridSpec x_grid() { return {0.01, 100.0, 400, GridSpec::Scale::Log}; }
GridSpec unit_grid() { return {0.001, 0.999, 500, GridSpec::Scale::Linear}; }
GridSpec monotone_grid() { return {0.01, 200.0, 400, GridSpec::Scale::Log}; }
GridSpec qi_grid() { return {0.01, 100.0, 200, GridSpec::Scale::Log}; }
GridSpec phi_grid() { return {1e-6, 50.0, 300, GridSpec::Scale::Log}; }

std::vector<double> q_set() {
    return {0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99};
}

} // namespace defaults

namespace {

BoundReport new_report(std::string name, double q, const GridSpec& grid) {
    BoundReport r;
    r.name = std::move(name);
    r.q = q;
    r.grid = grid;
    return r;
}

void add_violation(BoundReport& r, std::int64_t index, const BoundPoint& p,
                   const char* side, double margin) {
    Violation v;
    v.index = index;
    v.x = p.x;
    v.lower = p.lower;
    v.mid = p.mid;
    v.upper = p.upper;
    v.side = side;
    v.margin = margin;
    r.violations.push_back(std::move(v));
}

void require_positive_grid(const GridSpec& grid, const char* fn) {
    grid.validate();
    if (!(grid.start > 0.0)) {
        throw DomainError(std::string(fn) + ": grid must satisfy x > 0");
    }
}

void require_unit_grid(const GridSpec& grid, const char* fn) {
    grid.validate();
    if (!(grid.start > 0.0) || !(grid.stop < 1.0)) {
        throw DomainError(std::string(fn) +
                          ": grid must lie strictly inside (0,1)");
    }
}

bool non_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1]) return false;
    }
    return true;
}

bool non_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) return false;
    }
    return true;
}

// Deterministic 64-bit generator with an explicit bits-to-double mapping,
// so seeded suites produce identical streams on every platform (the
// standard-library distributions are implementation-defined).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace

BoundReport check_q_wendel(const QParam& q, double s, const GridSpec& grid,
                           const SeriesPolicy& policy) {
    policy.validate();
    require_positive_grid(grid, "check_q_wendel");
    if (!std::isfinite(s) || !(s > 0.0) || !(s < 1.0)) {
        throw DomainError("check_q_wendel: s must lie in (0,1)");
    }
    BoundReport r = new_report("wendel", q.q(), grid);
    for (double x : grid.points()) {
        const double l1px = std::log1p(-q.pow(x));
        const double l1pxs = std::log1p(-q.pow(x + s));
        const double ln_mid =
            qgamma_log_ratio_series(x + s, x, q, policy) - s * l1px;
        const double ln_lo = (1.0 - s) * (l1px - l1pxs);
        BoundPoint p;
        p.x = x;
        p.lower = std::exp(ln_lo);
        p.mid = std::exp(ln_mid);
        p.upper = 1.0;
        p.lower_margin = ln_mid - ln_lo;
        p.upper_margin = -ln_mid;
        r.points.push_back(p);
    }
    r.finalize(defaults::slack);
    return r;
}

BoundReport check_q_sandor(const QParam& q, const GridSpec& grid,
                           const SeriesPolicy& policy) {
    policy.validate();
    require_positive_grid(grid, "check_q_sandor");
    BoundReport r = new_report("sandor", q.q(), grid);
    const double ln1mq = std::log(q.one_minus_q());
    double lnF_last = 0.0;
    double lnG_last = 0.0;
    for (double x : grid.points()) {
        const double kernel =
            qgamma_log_ratio_series(x + 1.0, x + 0.5, q, policy);
        const double l1px = std::log1p(-q.pow(x));
        const double l1pxh = std::log1p(-q.pow(x + 0.5));
        const double lnF = kernel - 0.5 * l1px;  // ln(mid/lower)
        const double lnG = kernel - 0.5 * l1pxh; // ln(mid/upper)
        BoundPoint p;
        p.x = x;
        p.lower = std::exp(0.5 * (l1px - ln1mq));
        p.mid = std::exp(kernel - 0.5 * ln1mq);
        p.upper = std::exp(0.5 * (l1pxh - ln1mq));
        p.lower_margin = lnF;
        p.upper_margin = -lnG;
        r.points.push_back(p);
        lnF_last = lnF;
        lnG_last = lnG;
    }
    if (!r.points.empty()) {
        r.max_sharpness_gap =
            std::max(std::expm1(lnF_last), -std::expm1(lnG_last));
    }
    r.finalize(defaults::slack);
    return r;
}

BoundReport check_theorem2(const QParam& q, const GridSpec& grid,
                           const SeriesPolicy& policy) {
    policy.validate();
    require_unit_grid(grid, "check_theorem2");
    BoundReport r = new_report("theorem2", q.q(), grid);
    r.note = "strict bounds; interior points must clear the strictness floor";
    const double ln1mq = std::log(q.one_minus_q());
    const double s_half = qgamma_log_ratio_series(0.5, 1.0, q, policy);
    const double lgq_half = 0.5 * ln1mq + s_half; // ln Gamma_q(1/2)
    const double ln1psq = std::log1p(std::sqrt(q.q()));
    const auto xs = grid.points();
    double lnH_first = 0.0;
    double lnH_last = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double kernel =
            qgamma_log_ratio_series(x + 1.0, x + 0.5, q, policy);
        const double lnH = s_half + kernel;
        BoundPoint p;
        p.x = x;
        p.lower = std::exp(-lgq_half);
        p.mid = std::exp(kernel - 0.5 * ln1mq);
        p.upper = std::exp(ln1psq - lgq_half);
        p.lower_margin = lnH;
        p.upper_margin = ln1psq - lnH;
        const bool interior = i > 0 && i + 1 < xs.size();
        if (interior && !(p.lower_margin > defaults::strictness_floor)) {
            add_violation(r, static_cast<std::int64_t>(i), p, "lower",
                          p.lower_margin);
        }
        if (interior && !(p.upper_margin > defaults::strictness_floor)) {
            add_violation(r, static_cast<std::int64_t>(i), p, "upper",
                          p.upper_margin);
        }
        r.points.push_back(p);
        if (i == 0) lnH_first = lnH;
        lnH_last = lnH;
    }
    if (!r.points.empty()) {
        const double upper_gap =
            -(1.0 + std::sqrt(q.q())) * std::expm1(lnH_last - ln1psq);
        r.max_sharpness_gap = std::max(std::expm1(lnH_first), upper_gap);
    }
    r.finalize(defaults::slack);
    return r;
}

BoundReport check_monotone_F(const QParam& q, const GridSpec& grid,
                             const SeriesPolicy& policy) {
    policy.validate();
    require_positive_grid(grid, "check_monotone_F");
    BoundReport r = new_report("monotone_f", q.q(), grid);
    r.note = "upper slot holds the previous point's value (ordering check); "
             "index 0 is exempt";
    const auto xs = grid.points();
    double prev_lnF = 0.0;
    double prev_mid = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double lnF =
            qgamma_log_ratio_series(x + 1.0, x + 0.5, q, policy) -
            0.5 * std::log1p(-q.pow(x));
        BoundPoint p;
        p.x = x;
        p.lower = 1.0;
        p.mid = std::exp(lnF);
        p.lower_margin = lnF;
        if (i == 0) {
            p.upper = p.mid;
            p.upper_margin = 0.0;
        } else {
            p.upper = prev_mid;
            p.upper_margin = prev_lnF - lnF;
            if (!(p.upper_margin > 0.0)) {
                add_violation(r, static_cast<std::int64_t>(i), p, "ordering",
                              p.upper_margin);
            }
        }
        r.points.push_back(p);
        prev_lnF = lnF;
        prev_mid = p.mid;
    }
    r.finalize(defaults::slack);
    return r;
}

BoundReport check_monotone_G(const QParam& q, const GridSpec& grid,
                             const SeriesPolicy& policy) {
    policy.validate();
    require_positive_grid(grid, "check_monotone_G");
    BoundReport r = new_report("monotone_g", q.q(), grid);
    r.note = "lower slot holds the previous point's value (ordering check); "
             "index 0 is exempt";
    const auto xs = grid.points();
    double prev_lnG = 0.0;
    double prev_mid = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double lnG =
            qgamma_log_ratio_series(x + 1.0, x + 0.5, q, policy) -
            0.5 * std::log1p(-q.pow(x + 0.5));
        BoundPoint p;
        p.x = x;
        p.upper = 1.0;
        p.mid = std::exp(lnG);
        p.upper_margin = -lnG;
        if (i == 0) {
            p.lower = p.mid;
            p.lower_margin = 0.0;
        } else {
            p.lower = prev_mid;
            p.lower_margin = lnG - prev_lnG;
            if (!(p.lower_margin > 0.0)) {
                add_violation(r, static_cast<std::int64_t>(i), p, "ordering",
                              p.lower_margin);
            }
        }
        r.points.push_back(p);
        prev_lnG = lnG;
        prev_mid = p.mid;
    }
    r.finalize(defaults::slack);
    return r;
}

BoundReport check_monotone_H(const QParam& q, const GridSpec& grid,
                             const SeriesPolicy& policy) {
    policy.validate();
    require_unit_grid(grid, "check_monotone_H");
    BoundReport r = new_report("monotone_h", q.q(), grid);
    r.note = "strict increase checked between consecutive points "
             "(\"ordering\" violations)";
    const double s_half = qgamma_log_ratio_series(0.5, 1.0, q, policy);
    const double ln1psq = std::log1p(std::sqrt(q.q()));
    const auto xs = grid.points();
    double prev_lnH = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double lnH =
            s_half + qgamma_log_ratio_series(x + 1.0, x + 0.5, q, policy);
        BoundPoint p;
        p.x = x;
        p.lower = 1.0;
        p.mid = std::exp(lnH);
        p.upper = 1.0 + std::sqrt(q.q());
        p.lower_margin = lnH;
        p.upper_margin = ln1psq - lnH;
        if (i > 0 && !(lnH > prev_lnH)) {
            add_violation(r, static_cast<std::int64_t>(i), p, "ordering",
                          lnH - prev_lnH);
        }
        r.points.push_back(p);
        prev_lnH = lnH;
    }
    r.finalize(defaults::slack);
    return r;
}

LimitReport check_wendel_limits(const QParam& q, double alpha, double beta,
                                double x_probe, const SeriesPolicy& policy) {
    policy.validate();
    if (!std::isfinite(alpha) || !(alpha > 0.0) || !(alpha < 1.0) ||
        !std::isfinite(beta) || !(beta > 0.0) || !(beta < 1.0)) {
        throw DomainError("check_wendel_limits: alpha, beta must lie in (0,1)");
    }
    if (!std::isfinite(x_probe) || !(x_probe > 0.0)) {
        throw DomainError("check_wendel_limits: x_probe must be > 0");
    }
    LimitReport r;
    r.name = "wendel_limits";
    r.note = "each expression probed at x_probe and 2*x_probe; deviation "
             "must sit below ~4 q^x/(1-q) and shrink between probes; "
             "wendel_ratio uses s = alpha";
    r.q = q.q();
    r.alpha = alpha;
    r.beta = beta;
    r.x_probe = x_probe;

    const auto ln_wendel = [&](double x) {
        return qgamma_log_ratio_series(x + alpha, x, q, policy) -
               alpha * std::log1p(-q.pow(x));
    };
    const auto ln_ratio2 = [&](double x) {
        if (alpha == beta) return 0.0; // identical numerator and denominator
        return (beta - alpha) * std::log1p(-q.pow(x)) +
               qgamma_log_ratio_series(x + alpha, x + beta, q, policy);
    };

    const double probes[2] = {x_probe, 2.0 * x_probe};
    const std::pair<const char*, const std::function<double(double)>> exprs[2] =
        {{"wendel_ratio", ln_wendel}, {"ratio2", ln_ratio2}};
    for (const auto& [name, ln_expr] : exprs) {
        double prev_dev = 0.0;
        for (int k = 0; k < 2; ++k) {
            const double x = probes[k];
            const double lnv = ln_expr(x);
            LimitCase c;
            c.name = name;
            c.x = x;
            c.value = std::exp(lnv);
            c.limit = 1.0;
            c.deviation = std::abs(std::expm1(lnv));
            c.threshold = 4.0 * q.pow(x) / q.one_minus_q();
            c.below_threshold = c.deviation <= c.threshold;
            c.improved = k == 0 || c.deviation < prev_dev ||
                         (c.deviation == 0.0 && prev_dev == 0.0);
            c.pass = c.below_threshold && c.improved;
            r.cases.push_back(std::move(c));
            prev_dev = c.deviation;
        }
    }
    r.finalize();
    return r;
}

BoundReport check_qi_psi_bound(const QParam& q, const GridSpec& grid,
                               const SeriesPolicy& policy) {
    policy.validate();
    require_positive_grid(grid, "check_qi_psi_bound");
    BoundReport r = new_report("qi_psi_bound", q.q(), grid);
    r.note = "one-sided lower bound; upper slot mirrors mid with margin 0";
    const double sq = std::sqrt(q.q());
    const auto xs = grid.points();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        // Sigma = sum_{n>=0} q^n / [(1-q^{n+x+1})(1-q^{n+x+1/2})]; the psi
        // difference equals (-ln q) q^{x+1/2} (1-sqrt(q)) * Sigma, fused so
        // the margin keeps relative accuracy when both sides are ~q^x.
        double qa = q.pow(x + 1.0);
        double qb = q.pow(x + 0.5);
        double qn = 1.0;
        detail::KahanSum sum;
        bool done = false;
        for (std::int64_t n = 0; n < policy.max_terms; ++n) {
            sum.add(qn / ((1.0 - qa) * (1.0 - qb)));
            const double tail =
                qn * q.q() / (q.one_minus_q() * (1.0 - qa) * (1.0 - qb));
            if (tail <= policy.rel_tol * sum.value()) {
                done = true;
                break;
            }
            if ((n & 255) == 255) {
                const auto next = static_cast<double>(n + 1);
                qn = q.pow(next);
                qa = q.pow(next + x + 1.0);
                qb = q.pow(next + x + 0.5);
            } else {
                qn *= q.q();
                qa *= q.q();
                qb *= q.q();
            }
        }
        if (!done) {
            throw ConvergenceError("check_qi_psi_bound: max_terms exhausted",
                                   sum.value(), policy.max_terms);
        }
        const double weight = -q.ln_q() * q.pow(x + 0.5);
        const double lead = (1.0 - sq) * sum.value();
        const double half_term = 0.5 / (1.0 - q.pow(x + 0.5));
        const double margin = weight * (lead - half_term);
        BoundPoint p;
        p.x = x;
        p.lower = 0.5 * psi_exp_moment(x + 0.5, q);
        p.mid = p.lower + margin;
        p.upper = p.mid;
        p.lower_margin = margin;
        p.upper_margin = 0.0;
        if (!(margin > 0.0)) {
            add_violation(r, static_cast<std::int64_t>(i), p, "lower", margin);
        }
        r.points.push_back(p);
    }
    r.finalize(defaults::slack);
    return r;
}

BoundReport check_phi_negative(const GridSpec& t_grid) {
    t_grid.validate();
    BoundReport r = new_report("phi_negativity", 0.0, t_grid);
    r.note = "q-independent; the q field is unused. Strict negativity: any "
             "phi(t) >= 0 is a violation";
    const auto ts = t_grid.points();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double t = ts[i];
        const double mid = std::exp(-0.5 * t) - 0.5 * std::exp(-t) - 0.5;
        BoundPoint p;
        p.x = t;
        p.lower = mid;
        p.mid = mid;
        p.upper = 0.0;
        p.lower_margin = 0.0;
        p.upper_margin = -mid;
        if (!(mid < 0.0)) {
            add_violation(r, static_cast<std::int64_t>(i), p, "upper",
                          p.upper_margin);
        }
        r.points.push_back(p);
    }
    r.finalize(defaults::slack);
    return r;
}

BoundReport check_classical_inequalities(const GridSpec& grid) {
    require_positive_grid(grid, "check_classical_inequalities");
    BoundReport r = new_report("classical", 0.0, grid);
    r.note = "q-independent anchors; points are the integer doubling family "
             "(x = n = 1..20), then the Wendel s=1/2 sweep, then the "
             "square-root-ratio sweep over the grid";
    const double lg_half = classical_lgamma(0.5);
    const double ln2 = std::log(2.0);
    for (int n = 1; n <= 20; ++n) {
        const double lg_nh = classical_lgamma(n + 0.5);
        const double ln_lower = ln2 + lg_nh;
        const double ln_mid = lg_half + classical_lgamma(n + 1.0);
        const double ln_upper = n * ln2 + lg_nh;
        BoundPoint p;
        p.x = n;
        p.lower = std::exp(ln_lower);
        p.mid = std::exp(ln_mid);
        p.upper = std::exp(ln_upper);
        p.lower_margin = ln_mid - ln_lower;
        p.upper_margin = ln_upper - ln_mid;
        r.points.push_back(p);
    }
    constexpr double s = 0.5;
    for (double x : grid.points()) {
        const double ln_mid =
            classical_lgamma(x + s) - s * std::log(x) - classical_lgamma(x);
        const double ln_lo = (1.0 - s) * (std::log(x) - std::log(x + s));
        BoundPoint p;
        p.x = x;
        p.lower = std::exp(ln_lo);
        p.mid = std::exp(ln_mid);
        p.upper = 1.0;
        p.lower_margin = ln_mid - ln_lo;
        p.upper_margin = -ln_mid;
        r.points.push_back(p);
    }
    for (double x : grid.points()) {
        const double ln_mid =
            classical_lgamma(x + 1.0) - classical_lgamma(x + 0.5);
        BoundPoint p;
        p.x = x;
        p.lower = std::sqrt(x);
        p.mid = std::exp(ln_mid);
        p.upper = std::sqrt(x + 0.5);
        p.lower_margin = ln_mid - 0.5 * std::log(x);
        p.upper_margin = 0.5 * std::log(x + 0.5) - ln_mid;
        r.points.push_back(p);
    }
    r.finalize(defaults::slack);
    return r;
}

SharpnessReport sharpness_report(const QParam& q, SharpnessTarget which,
                                 const GridSpec& grid,
                                 const SeriesPolicy& policy) {
    policy.validate();
    SharpnessReport r;
    r.q = q.q();
    r.grid = grid;
    r.decay_checked = grid.count > 1;
    if (which == SharpnessTarget::Sandor) {
        require_positive_grid(grid, "sharpness_report");
        r.name = "sharpness_sandor";
        r.note = "empirical threshold max(4 q^x_max/(1+sqrt q), 1e-6); both "
                 "relative gaps taken at the largest grid point; decay "
                 "asserted with no rate claimed";
        const auto xs = grid.points();
        std::vector<double> lnF;
        std::vector<double> lnG;
        lnF.reserve(xs.size());
        lnG.reserve(xs.size());
        for (double x : xs) {
            const double kernel =
                qgamma_log_ratio_series(x + 1.0, x + 0.5, q, policy);
            lnF.push_back(kernel - 0.5 * std::log1p(-q.pow(x)));
            lnG.push_back(kernel - 0.5 * std::log1p(-q.pow(x + 0.5)));
        }
        r.lower_gap_at_probe = std::expm1(lnF.back());
        r.upper_gap_at_probe = -std::expm1(lnG.back());
        r.threshold = std::max(
            4.0 * q.pow(xs.back()) / (1.0 + std::sqrt(q.q())), 1e-6);
        if (r.decay_checked) {
            r.lower_decays = non_increasing(lnF);
            r.upper_decays = non_decreasing(lnG); // gap 1-G shrinks
        }
    } else {
        require_unit_grid(grid, "sharpness_report");
        r.name = "sharpness_theorem2";
        r.note = "empirical endpoint threshold 1e-2; lower gap at the first "
                 "grid point, upper gap at the last; margins must shrink "
                 "toward each endpoint";
        const double s_half = qgamma_log_ratio_series(0.5, 1.0, q, policy);
        const double ln1psq = std::log1p(std::sqrt(q.q()));
        const auto xs = grid.points();
        std::vector<double> lnH;
        lnH.reserve(xs.size());
        for (double x : xs) {
            lnH.push_back(s_half +
                          qgamma_log_ratio_series(x + 1.0, x + 0.5, q, policy));
        }
        r.lower_gap_at_probe = std::expm1(lnH.front());
        r.upper_gap_at_probe =
            -(1.0 + std::sqrt(q.q())) * std::expm1(lnH.back() - ln1psq);
        r.threshold = 1e-2;
        if (r.decay_checked) {
            // lnH nondecreasing <=> the gap toward each endpoint shrinks as
            // that endpoint is approached.
            r.lower_decays = non_decreasing(lnH);
            r.upper_decays = r.lower_decays;
        }
    }
    r.pass = r.lower_gap_at_probe <= r.threshold &&
             r.upper_gap_at_probe <= r.threshold &&
             (!r.decay_checked || (r.lower_decays && r.upper_decays));
    return r;
}

BoundReport check_holder_suite(const QParam& q, std::int64_t trials,
                               std::uint64_t seed,
                               const SeriesPolicy& policy) {
    policy.validate();
    if (trials < 0) {
        throw DomainError("check_holder_suite: trials must be >= 0");
    }
    GridSpec g;
    g.start = 0.0;
    g.stop = static_cast<double>(trials + 1);
    g.count = trials + 2;
    g.scale = GridSpec::Scale::Linear;
    BoundReport r = new_report("holder", q.q(), g);
    r.note = "x is the trial index: 0 = equality case f = g = 1, 1 = the "
             "Gamma-splitting instance, remaining points are seeded random "
             "piecewise integrands";
    const double up = 1.0 / q.one_minus_q();

    {
        const Integrand one = [](double) { return 1.0; };
        BoundPoint p = holder_check(one, one, 2.0, q, up, policy);
        p.x = 0.0;
        r.points.push_back(p);
    }
    {
        // f g = t * E_q^{-qt}, f^2 = sqrt-moment integrands: the instance
        // whose Hoelder bound splits Gamma_q(2) <= sqrt(Gamma_q(3/2) Gamma_q(5/2)).
        constexpr double s = 0.5;
        constexpr double xx = 1.5;
        const double qq = q.q();
        const Integrand f = [qq, q, policy](double t) {
            return std::pow(t, (1.0 - s) * (xx - 1.0)) *
                   std::pow(q_exp_E(-qq * t, q, policy), 1.0 - s);
        };
        const Integrand gfn = [qq, q, policy](double t) {
            return std::pow(t, s * xx) *
                   std::pow(q_exp_E(-qq * t, q, policy), s);
        };
        BoundPoint p = holder_check(f, gfn, 1.0 / (1.0 - s), q, up, policy);
        p.x = 1.0;
        r.points.push_back(p);
    }

    SplitMix64 rng(seed);
    const double a_cycle[3] = {1.5, 2.0, 3.0};
    for (std::int64_t k = 0; k < trials; ++k) {
        const double upper = 0.5 + 3.5 * rng.uniform();
        const auto make_fn = [&rng, upper]() {
            const double a0 = 0.1 + rng.uniform();
            const double a1 = rng.uniform();
            const double e1 = 0.25 + 2.0 * rng.uniform();
            const double step_at = upper * rng.uniform();
            const double h = 0.5 + rng.uniform();
            return Integrand([=](double t) {
                const double base = a0 + a1 * std::pow(t, e1);
                return t < step_at ? base : h * base;
            });
        };
        const Integrand f = make_fn();
        const Integrand gfn = make_fn();
        BoundPoint p =
            holder_check(f, gfn, a_cycle[k % 3], q, upper, policy);
        p.x = static_cast<double>(k + 2);
        r.points.push_back(p);
    }
    r.finalize(defaults::slack);
    return r;
}

} // namespace qg
