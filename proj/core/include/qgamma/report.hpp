#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qgamma/grid.hpp"

namespace qg {

/// One grid sample of a two-sided bound check. lower/mid/upper are the
/// LINEAR quantities being compared (lower <= mid <= upper expected);
/// lower_margin/upper_margin measure the slack toward each bound. For the
/// Gamma-ratio families they are the log-scale margins ln(mid/lower) and
/// ln(upper/mid) (approximately relative slack); the Hoelder check stores
/// the relative margin (upper - mid)/upper; difference-form checks store
/// plain differences. Checks that only bound one side store the inert side
/// with margin 0.
struct BoundPoint {
    double x = 0.0;
    double lower = 0.0;
    double mid = 0.0;
    double upper = 0.0;
    double lower_margin = 0.0;
    double upper_margin = 0.0;
};

/// A bound check that failed at one sample. Carries the full point values
/// so the failure is reproducible without rerunning the sweep.
struct Violation {
    std::int64_t index = 0;   ///< position in BoundReport::points
    double x = 0.0;
    double lower = 0.0;
    double mid = 0.0;
    double upper = 0.0;
    std::string side;         ///< "lower" | "upper" | "ordering"
    double margin = 0.0;      ///< the offending margin
};

/// Full result of running one inequality family over a grid at fixed q.
struct BoundReport {
    std::string name;         ///< e.g. "wendel", "sandor", "theorem2"
    std::string note;         ///< free-text caveats (may be empty)
    double q = 0.0;
    GridSpec grid;
    std::vector<BoundPoint> points;
    std::vector<Violation> violations;
    double min_lower_margin = 0.0;
    double min_upper_margin = 0.0;
    /// Largest of the terminal bound gaps at the sharpness probe end (for
    /// families with a sharpness claim; 0 otherwise).
    double max_sharpness_gap = 0.0;
    bool pass = false;

    /// Recompute min margins / pass from points+violations (used after
    /// deserialization and as a consistency check).
    void finalize(double slack = 1e-10);

    /// Serialize to a JSON object string (stable key order).
    std::string to_json(int indent = 2) const;
    static BoundReport from_json(const std::string& text);

    /// CSV: header then one row per point,
    ///   x,lower,mid,upper,lower_margin,upper_margin
    /// with %.17g formatting.
    void write_csv(std::ostream& os) const;

    /// Human-readable one-block summary.
    void write_text(std::ostream& os) const;
};

/// One asserted fact inside a limit check: an expression evaluated at a
/// probe point, compared against its claimed limit.
struct LimitCase {
    std::string name;         ///< which expression (e.g. "wendel_ratio")
    double x = 0.0;           ///< probe point
    double value = 0.0;       ///< expression value there
    double limit = 0.0;       ///< claimed limit
    double deviation = 0.0;   ///< |value - limit|
    double threshold = 0.0;   ///< deviation must sit below this
    bool below_threshold = false;
    /// Deviation shrank versus the same expression at the smaller probe
    /// (true by convention for the first probe of each expression).
    bool improved = false;
    bool pass = false;        ///< below_threshold && improved
};

/// Result of checking asymptotic claims: each expression is probed at
/// x_probe and 2*x_probe, asserting threshold decay plus improvement.
struct LimitReport {
    std::string name;
    std::string note;
    double q = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double x_probe = 0.0;
    std::vector<LimitCase> cases;
    bool pass = false;

    void finalize();          ///< pass = AND of case passes

    std::string to_json(int indent = 2) const;
    void write_text(std::ostream& os) const;
};

/// Result of a sharpness probe: how close an inequality comes to equality
/// near the configuration where its constants are claimed best-possible.
/// For the square-root-ratio family the probe end is the largest grid x
/// (both gaps must decay to ~0 asymptotically); for the unit-interval
/// family the lower gap is probed at the left endpoint and the upper gap
/// at the right endpoint.
struct SharpnessReport {
    std::string name;
    std::string note;               ///< marks thresholds as empirical
    double q = 0.0;
    GridSpec grid;
    double lower_gap_at_probe = 0.0; ///< gap toward the lower constant
    double upper_gap_at_probe = 0.0; ///< gap toward the upper constant
    double threshold = 0.0;          ///< both gaps must fall below this
    bool decay_checked = false;      ///< false for single-point grids
    bool lower_decays = false;       ///< gap shrinks approaching the probe
    bool upper_decays = false;
    bool pass = false;

    std::string to_json(int indent = 2) const;
    void write_text(std::ostream& os) const;
};

} // namespace qg
