#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgamma/checks.hpp"
#include "qgamma/qcore.hpp"
#include "qgamma/quadrature.hpp"
#include "qgamma/special.hpp"

namespace qg::cli {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

std::vector<double> parse_q_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) {
            tok.erase(tok.begin());
        }
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) {
            tok.pop_back();
        }
        double v = 0.0;
        const char* first = tok.data();
        const char* last = tok.data() + tok.size();
        auto res = std::from_chars(first, last, v);
        if (tok.empty() || res.ec != std::errc() || res.ptr != last) {
            throw DomainError("--q: cannot parse '" + tok + "' as a number");
        }
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) {
        throw DomainError("--q: empty list");
    }
    return out;
}

enum class Fmt { Text, Csv, Json };

Fmt parse_fmt(const std::string& name) {
    if (name == "text") return Fmt::Text;
    if (name == "csv") return Fmt::Csv;
    if (name == "json") return Fmt::Json;
    throw DomainError("--format: unknown format '" + name + "'");
}

// Collects per-report results during a verify/all run and renders them in
// the requested format.
class Emitter {
  public:
    Emitter(Fmt fmt, std::ostream& data) : fmt_(fmt), data_(data) {}

    void add(const BoundReport& r) {
        count(r.pass);
        if (fmt_ == Fmt::Json) {
            jsons_.push_back(r.to_json(2));
            return;
        }
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "[%s] %-11s q=%-7g points=%-5zu viol=%-4zu "
                      "min_lower=% .6e min_upper=% .6e",
                      r.pass ? "PASS" : "FAIL", r.name.c_str(), r.q,
                      r.points.size(), r.violations.size(),
                      r.min_lower_margin, r.min_upper_margin);
        data_ << buf << '\n';
        const std::size_t shown =
            r.violations.size() < 5 ? r.violations.size() : std::size_t{5};
        for (std::size_t i = 0; i < shown; ++i) {
            const Violation& v = r.violations[i];
            std::snprintf(buf, sizeof(buf),
                          "       violation idx=%lld x=%.17g side=%s "
                          "margin=% .6e",
                          static_cast<long long>(v.index), v.x,
                          v.side.c_str(), v.margin);
            data_ << buf << '\n';
        }
        if (r.violations.size() > shown) {
            data_ << "       ... " << (r.violations.size() - shown)
                  << " more violations\n";
        }
    }

    void add(const LimitReport& r) {
        count(r.pass);
        if (fmt_ == Fmt::Json) {
            jsons_.push_back(r.to_json(2));
            return;
        }
        char buf[256];
        std::snprintf(buf, sizeof(buf), "[%s] %-11s q=%-7g cases=%zu",
                      r.pass ? "PASS" : "FAIL", r.name.c_str(), r.q,
                      r.cases.size());
        data_ << buf << '\n';
        for (const LimitCase& c : r.cases) {
            std::snprintf(buf, sizeof(buf),
                          "       %-13s x=%-6g deviation=%.6e "
                          "threshold=%.6e improved=%s",
                          c.name.c_str(), c.x, c.deviation, c.threshold,
                          c.improved ? "yes" : "no");
            data_ << buf << '\n';
        }
    }

    void add(const SharpnessReport& r) {
        count(r.pass);
        if (fmt_ == Fmt::Json) {
            jsons_.push_back(r.to_json(2));
            return;
        }
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "[%s] %-11s q=%-7g lower_gap=%.6e upper_gap=%.6e "
                      "threshold=%.6e decay=%s",
                      r.pass ? "PASS" : "FAIL", r.name.c_str(), r.q,
                      r.lower_gap_at_probe, r.upper_gap_at_probe, r.threshold,
                      !r.decay_checked      ? "n/a"
                      : (r.lower_decays && r.upper_decays) ? "yes"
                                                           : "NO");
        data_ << buf << '\n';
    }

    /// Render the footer (text) or the accumulated array (json).
    void finish() {
        if (fmt_ == Fmt::Json) {
            data_ << "[\n";
            for (std::size_t i = 0; i < jsons_.size(); ++i) {
                data_ << jsons_[i];
                if (i + 1 < jsons_.size()) data_ << ',';
                data_ << '\n';
            }
            data_ << "]\n";
            return;
        }
        data_ << "summary: " << passed_ << '/' << total_
              << " reports passed\n";
    }

    int exit_code() const { return passed_ == total_ ? 0 : 1; }

  private:
    void count(bool pass) {
        ++total_;
        if (pass) ++passed_;
    }

    Fmt fmt_;
    std::ostream& data_;
    std::vector<std::string> jsons_;
    int total_ = 0;
    int passed_ = 0;
};

GridSpec classical_default_grid() {
    return GridSpec{0.5, 5.0, 50, GridSpec::Scale::Linear};
}

struct CommonCfg {
    double rel_tol = 1e-13;
    std::int64_t max_terms = 10'000'000;
    std::string output_path;

    SeriesPolicy policy() const {
        SeriesPolicy p;
        p.rel_tol = rel_tol;
        p.max_terms = max_terms;
        return p;
    }
};

struct EvalCfg {
    std::string fn;
    double q = 0.5;
    double x = 0.0;
    double t = 0.0;
    double a = 0.0;
    double p = 0.0;
    bool has_x = false;
    bool has_t = false;
    bool has_a = false;
    bool has_p = false;
    std::string backend;
};

struct VerifyCfg {
    std::string suite;
    std::string q_list = "0.05,0.1,0.3,0.5,0.7,0.9,0.99";
    std::string grid;
    double s = 0.5;
    double alpha = 0.5;
    double beta = 0.75;
    double x_probe = 25.0;
    std::int64_t trials = 50;
    std::uint64_t seed = 12345;
    std::string format = "text";
};

struct ScanCfg {
    std::string family;
    double q = 0.5;
    std::string grid;
    double s = 0.5;
    std::string format = "csv";
};

struct SharpCfg {
    std::string target;
    double q = 0.5;
    std::string grid;
    std::string format = "text";
};

int run_eval(const EvalCfg& c, const CommonCfg& common, std::ostream& data,
             std::ostream& err) {
    const QParam q(c.q);
    const SeriesPolicy pol = common.policy();
    auto need = [&](bool have, const char* flag) {
        if (!have) {
            throw DomainError("eval " + c.fn + ": " + flag + " is required");
        }
    };
    auto no_backend = [&]() {
        if (!c.backend.empty()) {
            throw DomainError("eval " + c.fn +
                              ": --backend does not apply here");
        }
    };

    double value = 0.0;
    if (c.fn == "qgamma" || c.fn == "log_qgamma") {
        need(c.has_x, "--x");
        QGammaBackend b = QGammaBackend::Product;
        if (!c.backend.empty()) {
            if (c.backend == "product") {
                b = QGammaBackend::Product;
            } else if (c.backend == "integral") {
                b = QGammaBackend::JacksonIntegral;
            } else {
                throw DomainError("eval " + c.fn + ": --backend must be "
                                  "'product' or 'integral'");
            }
        }
        value = c.fn == "qgamma" ? qgamma(c.x, q, pol, b)
                                 : log_qgamma(c.x, q, pol, b);
    } else if (c.fn == "qpsi") {
        need(c.has_x, "--x");
        QPsiBackend b = QPsiBackend::DirectSeries;
        if (!c.backend.empty()) {
            if (c.backend == "direct") {
                b = QPsiBackend::DirectSeries;
            } else if (c.backend == "lambert") {
                b = QPsiBackend::LambertSeries;
            } else {
                throw DomainError("eval qpsi: --backend must be 'direct' "
                                  "or 'lambert'");
            }
        }
        value = qpsi(c.x, q, pol, b);
    } else if (c.fn == "q_bracket") {
        need(c.has_x, "--x");
        no_backend();
        value = q_bracket(c.x, q);
    } else if (c.fn == "q_exp") {
        need(c.has_t, "--t");
        no_backend();
        value = q_exp_E(c.t, q, pol);
    } else if (c.fn == "pochhammer_inf") {
        need(c.has_a, "--a");
        no_backend();
        value = q_pochhammer_inf(c.a, q, pol);
    } else if (c.fn == "pi_q") {
        no_backend();
        value = pi_q(q, pol);
    } else if (c.fn == "jackson") {
        // Monomial integrand t^p on [0, a]; exact q-antiderivative exists,
        // making this a handy closed-form cross-check target.
        need(c.has_a, "--a");
        need(c.has_p, "--p");
        no_backend();
        if (!(c.p > -1.0)) {
            throw DomainError(
                "eval jackson: --p must be > -1 for convergence");
        }
        const double p_exp = c.p;
        const QIntegralResult r = jackson_integral_0a(
            [p_exp](double t) { return std::pow(t, p_exp); }, c.a, q, pol);
        data << fmt17(r.value) << '\n';
        err << "terms_used=" << r.terms_used << " converged="
            << (r.converged ? "true" : "false")
            << " tail_estimate=" << fmt17(r.tail_estimate) << '\n';
        return 0;
    } else {
        throw DomainError("eval: unknown function '" + c.fn + "'");
    }
    data << fmt17(value) << '\n';
    return 0;
}

/// Run every q-dependent report of `suite` at one q value.
void run_suite_for_q(const std::string& suite, const QParam& q,
                     const VerifyCfg& c, const SeriesPolicy& pol,
                     Emitter& em) {
    const bool all = suite == "all";
    auto grid_or = [&](const GridSpec& def) {
        return c.grid.empty() ? def : GridSpec::parse(c.grid);
    };
    if (all || suite == "wendel") {
        em.add(check_q_wendel(q, c.s, grid_or(defaults::x_grid()), pol));
    }
    if (all || suite == "sandor") {
        em.add(check_q_sandor(q, grid_or(defaults::x_grid()), pol));
    }
    if (all || suite == "theorem2") {
        em.add(check_theorem2(q, grid_or(defaults::unit_grid()), pol));
    }
    if (all || suite == "monotone") {
        em.add(check_monotone_F(q, grid_or(defaults::monotone_grid()), pol));
        em.add(check_monotone_G(q, grid_or(defaults::monotone_grid()), pol));
        em.add(check_monotone_H(q, grid_or(defaults::unit_grid()), pol));
    }
    if (all || suite == "limits") {
        em.add(check_wendel_limits(q, c.alpha, c.beta, c.x_probe, pol));
    }
    if (all || suite == "qi") {
        em.add(check_qi_psi_bound(q, grid_or(defaults::qi_grid()), pol));
    }
    if (all || suite == "holder") {
        em.add(check_holder_suite(q, c.trials, c.seed, pol));
    }
}

int run_verify(const VerifyCfg& c, const CommonCfg& common,
               bool with_sharpness, std::ostream& data) {
    const Fmt fmt = parse_fmt(c.format);
    if (fmt == Fmt::Csv) {
        throw DomainError(
            "verify: csv output is only available for scan; use text|json");
    }
    const SeriesPolicy pol = common.policy();
    Emitter em(fmt, data);
    auto grid_or = [&](const GridSpec& def) {
        return c.grid.empty() ? def : GridSpec::parse(c.grid);
    };

    const bool q_dependent = c.suite != "phi" && c.suite != "classical";
    if (q_dependent) {
        for (double qv : parse_q_list(c.q_list)) {
            const QParam q(qv);
            run_suite_for_q(c.suite, q, c, pol, em);
            if (with_sharpness) {
                em.add(sharpness_report(q, SharpnessTarget::Sandor,
                                        grid_or(defaults::monotone_grid()),
                                        pol));
                em.add(sharpness_report(q, SharpnessTarget::Theorem2,
                                        grid_or(defaults::unit_grid()),
                                        pol));
            }
        }
    }
    // q-independent families run once, after the q sweep.
    if (c.suite == "all" || c.suite == "phi") {
        em.add(check_phi_negative(grid_or(defaults::phi_grid())));
    }
    if (c.suite == "all" || c.suite == "classical") {
        em.add(check_classical_inequalities(grid_or(classical_default_grid())));
    }
    em.finish();
    return em.exit_code();
}

BoundReport make_scan_report(const ScanCfg& c, const SeriesPolicy& pol) {
    auto grid_or = [&](const GridSpec& def) {
        return c.grid.empty() ? def : GridSpec::parse(c.grid);
    };
    if (c.family == "phi") {
        return check_phi_negative(grid_or(defaults::phi_grid()));
    }
    if (c.family == "classical") {
        return check_classical_inequalities(grid_or(classical_default_grid()));
    }
    const QParam q(c.q);
    if (c.family == "wendel") {
        return check_q_wendel(q, c.s, grid_or(defaults::x_grid()), pol);
    }
    if (c.family == "sandor") {
        return check_q_sandor(q, grid_or(defaults::x_grid()), pol);
    }
    if (c.family == "theorem2") {
        return check_theorem2(q, grid_or(defaults::unit_grid()), pol);
    }
    if (c.family == "monotone-f") {
        return check_monotone_F(q, grid_or(defaults::monotone_grid()), pol);
    }
    if (c.family == "monotone-g") {
        return check_monotone_G(q, grid_or(defaults::monotone_grid()), pol);
    }
    if (c.family == "monotone-h") {
        return check_monotone_H(q, grid_or(defaults::unit_grid()), pol);
    }
    if (c.family == "qi") {
        return check_qi_psi_bound(q, grid_or(defaults::qi_grid()), pol);
    }
    throw DomainError("scan: unknown family '" + c.family + "'");
}

int run_scan(const ScanCfg& c, const CommonCfg& common, std::ostream& data) {
    const Fmt fmt = parse_fmt(c.format);
    const BoundReport r = make_scan_report(c, common.policy());
    if (fmt == Fmt::Csv) {
        r.write_csv(data);
    } else if (fmt == Fmt::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const BoundPoint& p : r.points) {
            nlohmann::ordered_json j;
            j["x"] = p.x;
            j["lower"] = p.lower;
            j["mid"] = p.mid;
            j["upper"] = p.upper;
            j["lower_margin"] = p.lower_margin;
            j["upper_margin"] = p.upper_margin;
            arr.push_back(std::move(j));
        }
        data << arr.dump(2) << '\n';
    } else {
        throw DomainError("scan: emits data tables; use --format csv|json");
    }
    return r.pass ? 0 : 1;
}

int run_sharpness(const SharpCfg& c, const CommonCfg& common,
                  std::ostream& data) {
    const Fmt fmt = parse_fmt(c.format);
    if (fmt == Fmt::Csv) {
        throw DomainError("sharpness: use --format text|json");
    }
    const QParam q(c.q);
    const bool sandor = c.target == "sandor";
    const GridSpec grid =
        !c.grid.empty() ? GridSpec::parse(c.grid)
        : sandor        ? defaults::monotone_grid()
                        : defaults::unit_grid();
    const SharpnessReport r = sharpness_report(
        q, sandor ? SharpnessTarget::Sandor : SharpnessTarget::Theorem2,
        grid, common.policy());
    if (fmt == Fmt::Json) {
        data << r.to_json(2) << '\n';
    } else {
        r.write_text(data);
    }
    return r.pass ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"q-deformed Gamma/psi function toolkit and inequality "
                 "verification lab"};
    app.name("qgamma");
    app.set_version_flag("--version", "qgamma 1.0.0");
    app.require_subcommand(1);

    CommonCfg common;
    auto add_common = [&common](CLI::App* sub) {
        sub->add_option("--rel-tol", common.rel_tol,
                        "relative truncation tolerance for all series")
            ->capture_default_str();
        sub->add_option("--max-terms", common.max_terms,
                        "hard cap on series terms before aborting")
            ->capture_default_str();
        sub->add_option("--output", common.output_path,
                        "write data output to this file instead of stdout");
    };

    // ---- eval ------------------------------------------------------------
    EvalCfg ev;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "evaluate one function at a point");
    eval_cmd
        ->add_option("function", ev.fn, "which function to evaluate")
        ->required()
        ->check(CLI::IsMember({"qgamma", "log_qgamma", "qpsi", "q_bracket",
                               "q_exp", "pochhammer_inf", "pi_q",
                               "jackson"}));
    eval_cmd->add_option("--q", ev.q, "deformation parameter in (0,1)")
        ->capture_default_str();
    CLI::Option* opt_x = eval_cmd->add_option("--x", ev.x, "argument x");
    CLI::Option* opt_t =
        eval_cmd->add_option("--t", ev.t, "argument t (q_exp)");
    CLI::Option* opt_a = eval_cmd->add_option(
        "--a", ev.a, "pochhammer_inf argument / jackson upper limit");
    CLI::Option* opt_p = eval_cmd->add_option(
        "--p", ev.p, "jackson monomial exponent: integrand t^p");
    eval_cmd->add_option("--backend", ev.backend,
                         "qgamma|log_qgamma: product|integral; "
                         "qpsi: direct|lambert");
    add_common(eval_cmd);

    // ---- verify ----------------------------------------------------------
    VerifyCfg vf;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run inequality suites; exit 0 iff every check passes");
    verify_cmd->add_option("suite", vf.suite, "which suite to run")
        ->required()
        ->check(CLI::IsMember({"wendel", "sandor", "theorem2", "monotone",
                               "limits", "qi", "phi", "holder", "classical",
                               "all"}));
    verify_cmd
        ->add_option("--q", vf.q_list,
                     "comma-separated q values (Cartesian, q outermost)")
        ->capture_default_str();
    verify_cmd->add_option("--grid", vf.grid,
                           "grid override, scale:start:stop:count");
    verify_cmd->add_option("--s", vf.s, "shift s in (0,1) for wendel")
        ->capture_default_str();
    verify_cmd->add_option("--alpha", vf.alpha, "limits: first shift")
        ->capture_default_str();
    verify_cmd->add_option("--beta", vf.beta, "limits: second shift")
        ->capture_default_str();
    verify_cmd->add_option("--x-probe", vf.x_probe, "limits: probe abscissa")
        ->capture_default_str();
    verify_cmd->add_option("--trials", vf.trials, "holder: random trials")
        ->capture_default_str();
    verify_cmd->add_option("--seed", vf.seed, "holder: RNG seed")
        ->capture_default_str();
    verify_cmd->add_option("--format", vf.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    add_common(verify_cmd);

    // ---- scan ------------------------------------------------------------
    ScanCfg sc;
    CLI::App* scan_cmd = app.add_subcommand(
        "scan", "emit per-grid-point bound data for plotting");
    scan_cmd->add_option("family", sc.family, "which bound family")
        ->required()
        ->check(CLI::IsMember({"wendel", "sandor", "theorem2", "monotone-f",
                               "monotone-g", "monotone-h", "qi", "phi",
                               "classical"}));
    scan_cmd->add_option("--q", sc.q, "deformation parameter in (0,1)")
        ->capture_default_str();
    scan_cmd->add_option("--grid", sc.grid,
                         "grid override, scale:start:stop:count");
    scan_cmd->add_option("--s", sc.s, "shift s in (0,1) for wendel")
        ->capture_default_str();
    scan_cmd->add_option("--format", sc.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_common(scan_cmd);

    // ---- sharpness -------------------------------------------------------
    SharpCfg sh;
    CLI::App* sharp_cmd = app.add_subcommand(
        "sharpness", "probe how close a bound comes to equality");
    sharp_cmd->add_option("target", sh.target, "which sharpness claim")
        ->required()
        ->check(CLI::IsMember({"sandor", "theorem2"}));
    sharp_cmd->add_option("--q", sh.q, "deformation parameter in (0,1)")
        ->capture_default_str();
    sharp_cmd->add_option("--grid", sh.grid,
                          "grid override, scale:start:stop:count");
    sharp_cmd->add_option("--format", sh.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    add_common(sharp_cmd);

    // ---- all -------------------------------------------------------------
    VerifyCfg av;
    av.suite = "all";
    CLI::App* all_cmd = app.add_subcommand(
        "all", "every verify suite plus both sharpness probes");
    all_cmd
        ->add_option("--q", av.q_list,
                     "comma-separated q values (Cartesian, q outermost)")
        ->capture_default_str();
    all_cmd->add_option("--s", av.s, "shift s in (0,1) for wendel")
        ->capture_default_str();
    all_cmd->add_option("--alpha", av.alpha, "limits: first shift")
        ->capture_default_str();
    all_cmd->add_option("--beta", av.beta, "limits: second shift")
        ->capture_default_str();
    all_cmd->add_option("--x-probe", av.x_probe, "limits: probe abscissa")
        ->capture_default_str();
    all_cmd->add_option("--trials", av.trials, "holder: random trials")
        ->capture_default_str();
    all_cmd->add_option("--seed", av.seed, "holder: RNG seed")
        ->capture_default_str();
    all_cmd->add_option("--format", av.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    add_common(all_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        CLI::App* deepest = &app;
        while (!deepest->get_subcommands().empty()) {
            deepest = deepest->get_subcommands().front();
        }
        out << deepest->help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << app.help();
        return 2;
    }

    try {
        std::ofstream file;
        std::ostream* data = &out;
        if (!common.output_path.empty()) {
            file.open(common.output_path);
            if (!file) {
                throw DomainError("--output: cannot open '" +
                                  common.output_path + "'");
            }
            data = &file;
        }
        if (eval_cmd->parsed()) {
            ev.has_x = opt_x->count() > 0;
            ev.has_t = opt_t->count() > 0;
            ev.has_a = opt_a->count() > 0;
            ev.has_p = opt_p->count() > 0;
            return run_eval(ev, common, *data, err);
        }
        if (verify_cmd->parsed()) {
            return run_verify(vf, common, /*with_sharpness=*/false, *data);
        }
        if (scan_cmd->parsed()) {
            return run_scan(sc, common, *data);
        }
        if (sharp_cmd->parsed()) {
            return run_sharpness(sh, common, *data);
        }
        if (all_cmd->parsed()) {
            return run_verify(av, common, /*with_sharpness=*/true, *data);
        }
        err << "error: no command\n" << app.help();
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << " (partial=" << fmt17(e.partial_value())
            << ", terms=" << e.terms_used() << ")\n";
        return 3;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace qg::cli
