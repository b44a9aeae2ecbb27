#include "qgamma/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "qgamma/policy.hpp"

namespace qg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

const char* scale_name(GridSpec::Scale s) {
    return s == GridSpec::Scale::Linear ? "linear" : "log";
}

GridSpec::Scale scale_from_name(const std::string& s) {
    if (s == "linear") return GridSpec::Scale::Linear;
    if (s == "log") return GridSpec::Scale::Log;
    throw DomainError("BoundReport: unknown grid scale '" + s + "'");
}

ordered_json grid_to_json(const GridSpec& g) {
    ordered_json j;
    j["scale"] = scale_name(g.scale);
    j["start"] = g.start;
    j["stop"] = g.stop;
    j["count"] = g.count;
    return j;
}

GridSpec grid_from_json(const ordered_json& j) {
    GridSpec g;
    g.scale = scale_from_name(j.at("scale").get<std::string>());
    g.start = j.at("start").get<double>();
    g.stop = j.at("stop").get<double>();
    g.count = j.at("count").get<std::int64_t>();
    return g;
}

} // namespace

void BoundReport::finalize(double slack) {
    min_lower_margin = 0.0;
    min_upper_margin = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const BoundPoint& p = points[i];
        if (i == 0) {
            min_lower_margin = p.lower_margin;
            min_upper_margin = p.upper_margin;
        } else {
            min_lower_margin = std::min(min_lower_margin, p.lower_margin);
            min_upper_margin = std::min(min_upper_margin, p.upper_margin);
        }
    }
    // Append any slack violations the producing check did not already
    // record (it may have recorded stricter ones, e.g. ordering breaks).
    auto already = [this](std::int64_t index, const char* side) {
        for (const Violation& v : violations) {
            if (v.index == index && v.side == side) return true;
        }
        return false;
    };
    for (std::size_t i = 0; i < points.size(); ++i) {
        const BoundPoint& p = points[i];
        const auto idx = static_cast<std::int64_t>(i);
        if (p.lower_margin < -slack && !already(idx, "lower")) {
            violations.push_back(
                {idx, p.x, p.lower, p.mid, p.upper, "lower", p.lower_margin});
        }
        if (p.upper_margin < -slack && !already(idx, "upper")) {
            violations.push_back(
                {idx, p.x, p.lower, p.mid, p.upper, "upper", p.upper_margin});
        }
    }
    std::stable_sort(violations.begin(), violations.end(),
                     [](const Violation& a, const Violation& b) {
                         return a.index < b.index;
                     });
    pass = violations.empty();
}

std::string BoundReport::to_json(int indent) const {
    ordered_json j;
    j["name"] = name;
    j["note"] = note;
    j["q"] = q;
    j["grid"] = grid_to_json(grid);
    ordered_json pts = ordered_json::array();
    for (const BoundPoint& p : points) {
        ordered_json e;
        e["x"] = p.x;
        e["lower"] = p.lower;
        e["mid"] = p.mid;
        e["upper"] = p.upper;
        e["lower_margin"] = p.lower_margin;
        e["upper_margin"] = p.upper_margin;
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    ordered_json vios = ordered_json::array();
    for (const Violation& v : violations) {
        ordered_json e;
        e["index"] = v.index;
        e["x"] = v.x;
        e["lower"] = v.lower;
        e["mid"] = v.mid;
        e["upper"] = v.upper;
        e["side"] = v.side;
        e["margin"] = v.margin;
        vios.push_back(std::move(e));
    }
    j["violations"] = std::move(vios);
    j["min_lower_margin"] = min_lower_margin;
    j["min_upper_margin"] = min_upper_margin;
    j["max_sharpness_gap"] = max_sharpness_gap;
    j["pass"] = pass;
    return j.dump(indent);
}

BoundReport BoundReport::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("BoundReport: invalid JSON: ") + e.what());
    }
    BoundReport r;
    r.name = j.at("name").get<std::string>();
    r.note = j.value("note", std::string{});
    r.q = j.at("q").get<double>();
    r.grid = grid_from_json(j.at("grid"));
    for (const auto& e : j.at("points")) {
        BoundPoint p;
        p.x = e.at("x").get<double>();
        p.lower = e.at("lower").get<double>();
        p.mid = e.at("mid").get<double>();
        p.upper = e.at("upper").get<double>();
        p.lower_margin = e.at("lower_margin").get<double>();
        p.upper_margin = e.at("upper_margin").get<double>();
        r.points.push_back(p);
    }
    for (const auto& e : j.at("violations")) {
        Violation v;
        v.index = e.at("index").get<std::int64_t>();
        v.x = e.at("x").get<double>();
        v.lower = e.at("lower").get<double>();
        v.mid = e.at("mid").get<double>();
        v.upper = e.at("upper").get<double>();
        v.side = e.at("side").get<std::string>();
        v.margin = e.at("margin").get<double>();
        r.violations.push_back(std::move(v));
    }
    r.min_lower_margin = j.at("min_lower_margin").get<double>();
    r.min_upper_margin = j.at("min_upper_margin").get<double>();
    r.max_sharpness_gap = j.at("max_sharpness_gap").get<double>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

void BoundReport::write_csv(std::ostream& os) const {
    os << "x,lower,mid,upper,lower_margin,upper_margin\n";
    for (const BoundPoint& p : points) {
        os << fmt17(p.x) << ',' << fmt17(p.lower) << ',' << fmt17(p.mid) << ','
           << fmt17(p.upper) << ',' << fmt17(p.lower_margin) << ','
           << fmt17(p.upper_margin) << '\n';
    }
}

void BoundReport::write_text(std::ostream& os) const {
    os << "check " << name << "  q=" << fmt17(q) << "  grid=" << grid.to_string()
       << "\n"
       << "  points: " << points.size()
       << "  violations: " << violations.size() << "\n"
       << "  min_lower_margin: " << fmt17(min_lower_margin)
       << "  min_upper_margin: " << fmt17(min_upper_margin) << "\n";
    if (max_sharpness_gap != 0.0) {
        os << "  max_sharpness_gap: " << fmt17(max_sharpness_gap) << "\n";
    }
    if (!note.empty()) {
        os << "  note: " << note << "\n";
    }
    for (const Violation& v : violations) {
        os << "  VIOLATION [" << v.side << "] i=" << v.index << " x=" << fmt17(v.x)
           << " lower=" << fmt17(v.lower) << " mid=" << fmt17(v.mid)
           << " upper=" << fmt17(v.upper) << " margin=" << fmt17(v.margin)
           << "\n";
    }
    os << "  result: " << (pass ? "PASS" : "FAIL") << "\n";
}

void LimitReport::finalize() {
    pass = !cases.empty();
    for (const LimitCase& c : cases) {
        if (!c.pass) pass = false;
    }
}

std::string LimitReport::to_json(int indent) const {
    ordered_json j;
    j["name"] = name;
    j["note"] = note;
    j["q"] = q;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["x_probe"] = x_probe;
    ordered_json cs = ordered_json::array();
    for (const LimitCase& c : cases) {
        ordered_json e;
        e["name"] = c.name;
        e["x"] = c.x;
        e["value"] = c.value;
        e["limit"] = c.limit;
        e["deviation"] = c.deviation;
        e["threshold"] = c.threshold;
        e["below_threshold"] = c.below_threshold;
        e["improved"] = c.improved;
        e["pass"] = c.pass;
        cs.push_back(std::move(e));
    }
    j["cases"] = std::move(cs);
    j["pass"] = pass;
    return j.dump(indent);
}

void LimitReport::write_text(std::ostream& os) const {
    os << "check " << name << "  q=" << fmt17(q) << "  alpha=" << fmt17(alpha)
       << "  beta=" << fmt17(beta) << "  x_probe=" << fmt17(x_probe) << "\n";
    if (!note.empty()) {
        os << "  note: " << note << "\n";
    }
    for (const LimitCase& c : cases) {
        os << "  " << c.name << " @ x=" << fmt17(c.x) << ": value=" << fmt17(c.value)
           << " deviation=" << fmt17(c.deviation)
           << " threshold=" << fmt17(c.threshold)
           << (c.below_threshold ? " below-threshold" : " ABOVE-THRESHOLD")
           << (c.improved ? " improved" : " NOT-IMPROVED") << " -> "
           << (c.pass ? "ok" : "FAIL") << "\n";
    }
    os << "  result: " << (pass ? "PASS" : "FAIL") << "\n";
}

std::string SharpnessReport::to_json(int indent) const {
    ordered_json j;
    j["name"] = name;
    j["note"] = note;
    j["q"] = q;
    j["grid"] = grid_to_json(grid);
    j["lower_gap_at_probe"] = lower_gap_at_probe;
    j["upper_gap_at_probe"] = upper_gap_at_probe;
    j["threshold"] = threshold;
    j["decay_checked"] = decay_checked;
    j["lower_decays"] = lower_decays;
    j["upper_decays"] = upper_decays;
    j["pass"] = pass;
    return j.dump(indent);
}

void SharpnessReport::write_text(std::ostream& os) const {
    os << "sharpness " << name << "  q=" << fmt17(q)
       << "  grid=" << grid.to_string() << "\n"
       << "  lower_gap_at_probe: " << fmt17(lower_gap_at_probe) << "\n"
       << "  upper_gap_at_probe: " << fmt17(upper_gap_at_probe) << "\n"
       << "  threshold: " << fmt17(threshold) << "\n";
    if (decay_checked) {
        os << "  decay: lower " << (lower_decays ? "ok" : "FAIL") << ", upper "
           << (upper_decays ? "ok" : "FAIL") << "\n";
    } else {
        os << "  decay: not checked (single-point grid)\n";
    }
    if (!note.empty()) {
        os << "  note: " << note << "\n";
    }
    os << "  result: " << (pass ? "PASS" : "FAIL") << "\n";
}

} // namespace qg
