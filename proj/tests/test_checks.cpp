// Tests for the inequality-verification suites. Oracles here are built only
// from long-double brute-force products and from library primitives that are
// themselves oracle-tested elsewhere (qpsi, qgamma, q_bracket, pi_q), never
// from the kernel the checks use internally.

#include <doctest.h>

#include <qgamma/checks.hpp>
#include <qgamma/qcore.hpp>
#include <qgamma/special.hpp>

#include <cmath>
#include <cstddef>
#include <vector>

using qg::BoundReport;
using qg::DomainError;
using qg::GridSpec;
using qg::LimitReport;
using qg::QParam;
using qg::SeriesPolicy;
using qg::SharpnessReport;
using qg::SharpnessTarget;

namespace {

// Brute-force long-double q-Gamma: (1-q)^{1-x} prod (1-q^{n+1})/(1-q^{n+x}).
long double qgamma_brute(long double x, long double q) {
    long double prod = 1.0L;
    long double qn1 = q;            // q^{n+1}
    long double qnx = std::pow(q, x); // q^{n+x}
    for (int n = 0; n < 200000; ++n) {
        prod *= (1.0L - qn1) / (1.0L - qnx);
        if (qn1 < 1e-24L && qnx < 1e-24L) break;
        qn1 *= q;
        qnx *= q;
    }
    return std::pow(1.0L - q, 1.0L - x) * prod;
}

// [x]_q in long double.
long double bracket_brute(long double x, long double q) {
    return (1.0L - std::pow(q, x)) / (1.0L - q);
}

GridSpec single_point(double x) {
    GridSpec g;
    g.start = x;
    g.stop = x;
    g.count = 1;
    g.scale = GridSpec::Scale::Linear;
    return g;
}

GridSpec make_grid(double a, double b, std::int64_t n, GridSpec::Scale sc) {
    GridSpec g;
    g.start = a;
    g.stop = b;
    g.count = n;
    g.scale = sc;
    return g;
}

// Shared invariant: for the log-domain report families, the stored margins
// must be recomputable from the stored lower/mid/upper slots. Tiny margins
// are kept in the log domain at full precision while the linear slots round
// to ~1, so the comparison is absolute near zero and relative at scale.
void check_log_margin_consistency(const BoundReport& rep, double tol = 1e-12) {
    for (const auto& p : rep.points) {
        const double lo = std::log(p.mid / p.lower);
        const double up = std::log(p.upper / p.mid);
        CHECK(std::abs(p.lower_margin - lo) <=
              tol * std::max(1.0, std::abs(p.lower_margin)));
        CHECK(std::abs(p.upper_margin - up) <=
              tol * std::max(1.0, std::abs(p.upper_margin)));
    }
}

} // namespace

TEST_CASE("wendel: slots match the brute-force q-Gamma oracle") {
    const double qs[] = {0.1, 0.5, 0.9};
    const double ss[] = {0.25, 0.5, 0.9};
    const double xs[] = {0.7, 1.0, 3.2};
    for (int i = 0; i < 3; ++i) {
        const long double q = qs[i];
        const long double s = ss[i];
        const long double x = xs[i];
        const auto rep = qg::check_q_wendel(QParam(qs[i]), ss[i],
                                            single_point(xs[i]));
        REQUIRE(rep.points.size() == 1);
        const auto& p = rep.points[0];
        const long double mid_oracle =
            qgamma_brute(x + s, q) /
            (qgamma_brute(x, q) * std::pow(bracket_brute(x, q), s));
        const long double lo_oracle =
            std::pow(bracket_brute(x, q) / bracket_brute(x + s, q), 1.0L - s);
        CHECK(std::abs(p.mid - static_cast<double>(mid_oracle)) <=
              1e-12 * std::abs(static_cast<double>(mid_oracle)));
        CHECK(std::abs(p.lower - static_cast<double>(lo_oracle)) <=
              1e-12 * std::abs(static_cast<double>(lo_oracle)));
        CHECK(p.upper == 1.0);
        // Margins are the log gaps between the slots.
        const double lm_oracle = static_cast<double>(
            std::log(mid_oracle) - std::log(lo_oracle));
        const double um_oracle = static_cast<double>(-std::log(mid_oracle));
        CHECK(std::abs(p.lower_margin - lm_oracle) <=
              1e-12 * std::max(1.0, std::abs(lm_oracle)));
        CHECK(std::abs(p.upper_margin - um_oracle) <=
              1e-12 * std::max(1.0, std::abs(um_oracle)));
    }
}

TEST_CASE("wendel: zero violations and strictly positive margins on defaults") {
    for (double qv : {0.1, 0.5, 0.9}) {
        const auto rep = qg::check_q_wendel(QParam(qv), 0.5,
                                            qg::defaults::x_grid());
        CHECK(rep.name == "wendel");
        CHECK(rep.q == qv);
        CHECK(rep.pass);
        CHECK(rep.violations.empty());
        CHECK(rep.points.size() == 400);
        CHECK(rep.min_lower_margin > 0.0);
        CHECK(rep.min_upper_margin > 0.0);
    }
}

TEST_CASE("wendel: parameter and grid validation") {
    const QParam q(0.5);
    const auto g = qg::defaults::x_grid();
    CHECK_THROWS_AS(qg::check_q_wendel(q, 0.0, g), DomainError);
    CHECK_THROWS_AS(qg::check_q_wendel(q, 1.0, g), DomainError);
    CHECK_THROWS_AS(qg::check_q_wendel(q, -0.3, g), DomainError);
    CHECK_THROWS_AS(
        qg::check_q_wendel(q, std::nan(""), g), DomainError);
    // x = 0 is outside the domain of every bound in this family.
    CHECK_THROWS_AS(
        qg::check_q_wendel(q, 0.5,
                           make_grid(0.0, 1.0, 10, GridSpec::Scale::Linear)),
        DomainError);
}

TEST_CASE("wendel: s -> 0 collapse drives the ratio to 1") {
    const auto rep = qg::check_q_wendel(QParam(0.5), 1e-6, single_point(1.0));
    REQUIRE(rep.points.size() == 1);
    CHECK(std::abs(std::log(rep.points[0].mid)) <= 1e-4);
    CHECK(rep.pass); // strict inequalities survive the collapse
}

TEST_CASE("sandor: slots match the brute-force oracle and the closed form") {
    // Closed form at x = 1: mid = Gamma_q(2)/Gamma_q(1.5) = 1/Gamma_q(1.5)
    // and Gamma_q(1.5) = [1/2]_q sqrt(pi_q).
    for (double qv : {0.3, 0.5, 0.9}) {
        const QParam q(qv);
        const auto rep = qg::check_q_sandor(q, single_point(1.0));
        REQUIRE(rep.points.size() == 1);
        const double closed =
            1.0 / (qg::q_bracket(0.5, q) * std::sqrt(qg::pi_q(q)));
        CHECK(std::abs(rep.points[0].mid - closed) <= 1e-12 * closed);
    }
    // Generic point against the long-double product.
    const long double q = 0.5L;
    const long double x = 1.3L;
    const auto rep = qg::check_q_sandor(QParam(0.5), single_point(1.3));
    const auto& p = rep.points[0];
    const long double mid_oracle =
        qgamma_brute(x + 1.0L, q) / qgamma_brute(x + 0.5L, q);
    CHECK(std::abs(p.mid - static_cast<double>(mid_oracle)) <=
          1e-12 * std::abs(static_cast<double>(mid_oracle)));
    CHECK(p.lower ==
          doctest::Approx(std::sqrt(qg::q_bracket(1.3, QParam(0.5))))
              .epsilon(1e-13));
    CHECK(p.upper ==
          doctest::Approx(std::sqrt(qg::q_bracket(1.8, QParam(0.5))))
              .epsilon(1e-13));
}

TEST_CASE("sandor: zero violations on defaults across q") {
    for (double qv : {0.1, 0.5, 0.9}) {
        const auto rep = qg::check_q_sandor(QParam(qv), qg::defaults::x_grid());
        CHECK(rep.name == "sandor");
        CHECK(rep.pass);
        CHECK(rep.violations.empty());
        CHECK(rep.min_lower_margin > 0.0);
        CHECK(rep.min_upper_margin > 0.0);
    }
}

TEST_CASE("sandor bounds follow from the wendel lemma at s = 1/2") {
    // The upper half of the sandor bound at x is exactly the wendel ratio
    // statement evaluated at x + 1/2 with s = 1/2; the margins must agree.
    const QParam q(0.7);
    for (double x : {0.75, 1.5, 4.0, 12.5}) {
        const auto w = qg::check_q_wendel(q, 0.5, single_point(x + 0.5));
        const auto s = qg::check_q_sandor(q, single_point(x));
        REQUIRE(w.points.size() == 1);
        REQUIRE(s.points.size() == 1);
        CHECK(std::abs(w.points[0].upper_margin - s.points[0].upper_margin) <=
              1e-12 * std::max(1.0, std::abs(s.points[0].upper_margin)));
    }
}

TEST_CASE("theorem2: closed form at x = 1/2 and interior strictness") {
    // mid(1/2) = Gamma_q(1.5)/Gamma_q(1) = [1/2]_q sqrt(pi_q).
    for (double qv : {0.3, 0.5, 0.9}) {
        const QParam q(qv);
        const auto rep = qg::check_theorem2(q, single_point(0.5));
        REQUIRE(rep.points.size() == 1);
        const double closed =
            qg::q_bracket(0.5, q) * std::sqrt(qg::pi_q(q));
        CHECK(std::abs(rep.points[0].mid - closed) <= 1e-12 * closed);
        // Constant bounds on the whole unit interval.
        CHECK(rep.points[0].lower ==
              doctest::Approx(1.0 / std::sqrt(qg::pi_q(q))).epsilon(1e-13));
        CHECK(rep.points[0].upper ==
              doctest::Approx((1.0 + std::sqrt(qv)) / std::sqrt(qg::pi_q(q)))
                  .epsilon(1e-13));
    }

    const auto rep = qg::check_theorem2(QParam(0.5), qg::defaults::unit_grid());
    CHECK(rep.name == "theorem2");
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
    REQUIRE(rep.points.size() == 500);
    // Strict inequality must hold with a visible margin away from the
    // endpoints; the first and last grid points are exempt because the
    // bounds become equalities in the x -> 0 and x -> 1 limits.
    for (std::size_t i = 1; i + 1 < rep.points.size(); ++i) {
        CHECK(rep.points[i].lower_margin > qg::defaults::strictness_floor);
        CHECK(rep.points[i].upper_margin > qg::defaults::strictness_floor);
    }
    // Grid must lie strictly inside (0,1).
    CHECK_THROWS_AS(
        qg::check_theorem2(QParam(0.5),
                           make_grid(0.5, 1.2, 10, GridSpec::Scale::Linear)),
        DomainError);
}

TEST_CASE("monotone F, G, H: ordering holds on defaults") {
    const QParam q(0.5);
    const double sq = std::sqrt(0.5);

    const auto f = qg::check_monotone_F(q, qg::defaults::monotone_grid());
    CHECK(f.name == "monotone_f");
    CHECK(f.pass);
    REQUIRE(!f.points.empty());
    CHECK(f.points[0].upper_margin == 0.0);
    CHECK(f.points[0].upper == f.points[0].mid);
    for (std::size_t i = 0; i < f.points.size(); ++i) {
        // F > 1 holds strictly in the log domain; the linear slot rounds
        // to exactly 1.0 once ln F drops below one ulp.
        CHECK(f.points[i].lower_margin > 0.0);
        if (i > 0) CHECK(f.points[i].upper_margin > 0.0); // F decreasing
    }

    const auto g = qg::check_monotone_G(q, qg::defaults::monotone_grid());
    CHECK(g.name == "monotone_g");
    CHECK(g.pass);
    CHECK(g.points[0].lower_margin == 0.0);
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        CHECK(g.points[i].upper_margin > 0.0);      // G < 1, log domain
        if (i > 0) CHECK(g.points[i].lower_margin > 0.0); // G increasing
    }

    const auto h = qg::check_monotone_H(q, qg::defaults::unit_grid());
    CHECK(h.name == "monotone_h");
    CHECK(h.pass);
    double prev = 0.0;
    for (std::size_t i = 0; i < h.points.size(); ++i) {
        CHECK(h.points[i].mid > 1.0);
        CHECK(h.points[i].mid < 1.0 + sq);
        if (i > 0) CHECK(h.points[i].mid > prev); // strictly increasing
        prev = h.points[i].mid;
    }
    CHECK_THROWS_AS(
        qg::check_monotone_H(QParam(0.5),
                             make_grid(0.1, 1.5, 10, GridSpec::Scale::Linear)),
        DomainError);
}

TEST_CASE("limit report: deviations sit under the q^x envelope and improve") {
    const auto rep =
        qg::check_wendel_limits(QParam(0.5), 0.5, 0.75, 25.0);
    CHECK(rep.name == "wendel_limits");
    CHECK(rep.pass);
    REQUIRE(rep.cases.size() == 4);
    CHECK(rep.cases[0].name == "wendel_ratio");
    CHECK(rep.cases[0].x == 25.0);
    CHECK(rep.cases[1].x == 50.0);
    CHECK(rep.cases[2].name == "ratio2");
    for (const auto& c : rep.cases) {
        CHECK(c.limit == 1.0);
        CHECK(c.below_threshold);
        CHECK(c.improved);
        CHECK(c.pass);
        CHECK(c.deviation <= c.threshold);
        CHECK(c.threshold ==
              doctest::Approx(4.0 * std::pow(0.5, c.x) / 0.5).epsilon(1e-13));
    }
    // Second probe must actually be much closer to the limit.
    CHECK(rep.cases[1].deviation < 1e-3 * rep.cases[0].deviation);
    CHECK(rep.cases[3].deviation < 1e-3 * rep.cases[2].deviation);
}

TEST_CASE("limit report: alpha == beta makes ratio2 exactly 1") {
    const auto rep = qg::check_wendel_limits(QParam(0.5), 0.5, 0.5, 25.0);
    CHECK(rep.pass);
    REQUIRE(rep.cases.size() == 4);
    CHECK(rep.cases[2].deviation == 0.0);
    CHECK(rep.cases[3].deviation == 0.0);
    CHECK(rep.cases[3].improved);
}

TEST_CASE("limit report: parameter validation") {
    const QParam q(0.5);
    CHECK_THROWS_AS(qg::check_wendel_limits(q, 0.0, 0.5, 25.0), DomainError);
    CHECK_THROWS_AS(qg::check_wendel_limits(q, 0.5, 1.0, 25.0), DomainError);
    CHECK_THROWS_AS(qg::check_wendel_limits(q, 0.5, 0.5, 0.0), DomainError);
    CHECK_THROWS_AS(qg::check_wendel_limits(q, 0.5, 0.5, -3.0), DomainError);
}

TEST_CASE("qi bound: margin equals the psi difference minus the half term") {
    const QParam q(0.5);
    const auto rep = qg::check_qi_psi_bound(q, single_point(1.0));
    REQUIRE(rep.points.size() == 1);
    const auto& p = rep.points[0];
    // Oracle from the separately tested psi evaluator.
    const double psi_diff = qg::qpsi(2.0, q) - qg::qpsi(1.5, q);
    const double half = 0.5 * qg::psi_exp_moment(1.5, q);
    CHECK(std::abs(p.mid - psi_diff) <= 1e-12 * std::abs(psi_diff));
    CHECK(p.lower == doctest::Approx(half).epsilon(1e-13));
    CHECK(std::abs(p.lower_margin - (psi_diff - half)) <=
          1e-12 * std::abs(psi_diff - half));
    CHECK(p.upper == p.mid);
    CHECK(p.upper_margin == 0.0);
}

TEST_CASE("qi bound: zero violations on defaults, including q = 0.99") {
    for (double qv : {0.1, 0.5, 0.99}) {
        const auto rep =
            qg::check_qi_psi_bound(QParam(qv), qg::defaults::qi_grid());
        CHECK(rep.name == "qi_psi_bound");
        CHECK(rep.pass);
        CHECK(rep.violations.empty());
        CHECK(rep.min_lower_margin > 0.0);
    }
}

TEST_CASE("phi negativity: strict on the default grid, equality at t = 0") {
    const auto rep = qg::check_phi_negative(qg::defaults::phi_grid());
    CHECK(rep.name == "phi_negativity");
    CHECK(rep.q == 0.0); // q-independent
    CHECK(rep.pass);
    CHECK(rep.min_upper_margin > 0.0);

    // Value check at t = 1 against the definition.
    const auto one = qg::check_phi_negative(single_point(1.0));
    const double direct =
        std::exp(-0.5) - 0.5 * std::exp(-1.0) - 0.5;
    CHECK(one.points[0].mid == doctest::Approx(direct).epsilon(1e-15));
    CHECK(one.points[0].upper == 0.0);
    CHECK(one.points[0].upper_margin == -one.points[0].mid);

    // t = 0 gives phi = 0: non-strict, so it must be flagged.
    const auto bad = qg::check_phi_negative(
        make_grid(0.0, 50.0, 10, GridSpec::Scale::Linear));
    CHECK(!bad.pass);
    REQUIRE(!bad.violations.empty());
    CHECK(bad.violations[0].index == 0);
    CHECK(bad.violations[0].side == "upper");
    CHECK(bad.violations[0].x == 0.0);
}

TEST_CASE("classical anchors: doubling family exact at n = 1, all pass") {
    const auto rep = qg::check_classical_inequalities(
        make_grid(0.5, 5.0, 50, GridSpec::Scale::Linear));
    CHECK(rep.name == "classical");
    CHECK(rep.q == 0.0);
    CHECK(rep.pass);
    REQUIRE(rep.points.size() == 120); // 20 integers + 2 sweeps of 50
    // n = 1: 2 Gamma(3/2) = Gamma(1/2) Gamma(2) = 2^1 Gamma(3/2) = sqrt(pi);
    // both margins collapse to rounding noise.
    CHECK(std::abs(rep.points[0].lower_margin) <= 1e-13);
    CHECK(std::abs(rep.points[0].upper_margin) <= 1e-13);
    CHECK(rep.points[0].mid ==
          doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-13));
    // n >= 2 strictly separates.
    CHECK(rep.points[1].lower_margin > 0.1);
    CHECK(rep.points[1].upper_margin > 0.1);
    for (const auto& p : rep.points) {
        CHECK(p.lower_margin >= -1e-13);
        CHECK(p.upper_margin >= -1e-13);
    }
}

TEST_CASE("holder suite: seeded trials pass, equality case is tight") {
    const QParam q(0.5);
    const auto rep = qg::check_holder_suite(q, 50, 12345);
    CHECK(rep.name == "holder");
    CHECK(rep.pass);
    REQUIRE(rep.points.size() == 52); // equality + Gamma split + 50 trials
    const auto& eq = rep.points[0];
    CHECK(std::abs(eq.upper_margin) <= 1e-14); // f = g makes it an equality
    CHECK(eq.lower_margin > 0.0);
    // Point 1 splits Gamma_q(2) = 1 against sqrt(Gamma_q(3/2) Gamma_q(5/2)).
    const auto& split = rep.points[1];
    CHECK(split.mid == doctest::Approx(1.0).epsilon(1e-10));
    const double rhs = std::sqrt(qg::qgamma(1.5, q) * qg::qgamma(2.5, q));
    CHECK(split.upper == doctest::Approx(rhs).epsilon(1e-9));
    CHECK(split.upper_margin > 0.0);
    for (const auto& p : rep.points) {
        CHECK(p.upper_margin >= -1e-10);
    }
}

TEST_CASE("holder suite: deterministic under a fixed seed") {
    const QParam q(0.5);
    const auto a = qg::check_holder_suite(q, 20, 987654321u);
    const auto b = qg::check_holder_suite(q, 20, 987654321u);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].lower == b.points[i].lower);
        CHECK(a.points[i].mid == b.points[i].mid);
        CHECK(a.points[i].upper == b.points[i].upper);
        CHECK(a.points[i].lower_margin == b.points[i].lower_margin);
        CHECK(a.points[i].upper_margin == b.points[i].upper_margin);
    }
    // A different seed must produce a different stream.
    const auto c = qg::check_holder_suite(q, 20, 1u);
    bool any_diff = false;
    for (std::size_t i = 2; i < c.points.size(); ++i) {
        if (c.points[i].mid != a.points[i].mid) any_diff = true;
    }
    CHECK(any_diff);

    CHECK(qg::check_holder_suite(q, 0, 1u).points.size() == 2);
    CHECK_THROWS_AS(qg::check_holder_suite(q, -1, 1u), DomainError);
}

TEST_CASE("sharpness: sandor gaps collapse at large x and decay monotonically") {
    const auto rep = qg::sharpness_report(QParam(0.5), SharpnessTarget::Sandor,
                                          qg::defaults::monotone_grid());
    CHECK(rep.name == "sharpness_sandor");
    CHECK(rep.pass);
    CHECK(rep.decay_checked);
    CHECK(rep.lower_decays);
    CHECK(rep.upper_decays);
    CHECK(rep.threshold == 1e-6); // the q^x term has long since vanished
    CHECK(rep.lower_gap_at_probe >= 0.0);
    CHECK(rep.upper_gap_at_probe >= 0.0);
    CHECK(rep.lower_gap_at_probe < 1e-20);
    CHECK(rep.upper_gap_at_probe < 1e-20);

    // Near q = 1 the gaps are larger but the adaptive threshold scales.
    const auto hard = qg::sharpness_report(
        QParam(0.99), SharpnessTarget::Sandor, qg::defaults::monotone_grid());
    CHECK(hard.pass);
    CHECK(hard.lower_gap_at_probe > 0.0);
    CHECK(hard.threshold > 1e-6);
}

TEST_CASE("sharpness: theorem2 endpoint gaps match the known magnitudes") {
    const auto rep = qg::sharpness_report(
        QParam(0.5), SharpnessTarget::Theorem2, qg::defaults::unit_grid());
    CHECK(rep.name == "sharpness_theorem2");
    CHECK(rep.pass);
    CHECK(rep.threshold == 1e-2);
    CHECK(rep.lower_gap_at_probe == doctest::Approx(1.2171e-3).epsilon(1e-3));
    CHECK(rep.upper_gap_at_probe == doctest::Approx(4.061e-4).epsilon(1e-3));
    CHECK(rep.decay_checked);
    CHECK(rep.lower_decays);
    CHECK(rep.upper_decays);
}

TEST_CASE("sharpness: single-point grid skips the decay check") {
    const auto rep = qg::sharpness_report(QParam(0.5), SharpnessTarget::Sandor,
                                          single_point(5.0));
    CHECK(!rep.decay_checked);
    CHECK(rep.pass); // gap at x = 5 is well under the adaptive threshold
}

TEST_CASE("margins are recomputable from the stored slots") {
    const QParam q(0.5);
    const auto xg = make_grid(0.1, 50.0, 40, GridSpec::Scale::Log);
    const auto ug = make_grid(0.05, 0.95, 31, GridSpec::Scale::Linear);
    check_log_margin_consistency(qg::check_q_wendel(q, 0.5, xg));
    check_log_margin_consistency(qg::check_q_sandor(q, xg));
    check_log_margin_consistency(qg::check_theorem2(q, ug));
    check_log_margin_consistency(qg::check_monotone_F(q, xg));
    check_log_margin_consistency(qg::check_monotone_G(q, xg));
    check_log_margin_consistency(qg::check_monotone_H(q, ug));
    // Difference-domain families.
    for (const auto& p : qg::check_qi_psi_bound(q, xg).points) {
        CHECK(std::abs(p.lower_margin - (p.mid - p.lower)) <=
              1e-12 * std::max(1.0, std::abs(p.lower_margin)));
        CHECK(p.upper_margin == 0.0);
    }
    for (const auto& p :
         qg::check_phi_negative(make_grid(0.1, 20.0, 25,
                                          GridSpec::Scale::Log)).points) {
        CHECK(p.upper_margin == -p.mid);
        CHECK(p.lower_margin == 0.0);
    }
}

TEST_CASE("full q sweep: every family passes on reduced grids") {
    const auto xg = make_grid(0.01, 100.0, 80, GridSpec::Scale::Log);
    const auto ug = make_grid(0.001, 0.999, 80, GridSpec::Scale::Linear);
    for (double qv : qg::defaults::q_set()) {
        const QParam q(qv);
        CHECK(qg::check_q_wendel(q, 0.5, xg).pass);
        CHECK(qg::check_q_sandor(q, xg).pass);
        CHECK(qg::check_theorem2(q, ug).pass);
        CHECK(qg::check_monotone_H(q, ug).pass);
    }
    CHECK(qg::defaults::q_set().size() == 7);
}

TEST_CASE("q -> 1: sandor ratio approaches the classical Gamma ratio") {
    const auto rep = qg::check_q_sandor(QParam(0.9999), single_point(4.0));
    REQUIRE(rep.points.size() == 1);
    const double classical =
        std::exp(qg::classical_lgamma(5.0) - qg::classical_lgamma(4.5));
    CHECK(std::abs(rep.points[0].mid - classical) <= 1e-2 * classical);
}
