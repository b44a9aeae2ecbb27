#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qg {

/// Evaluation grid: `count` points from start to stop inclusive, spaced
/// linearly or logarithmically. count == 1 degenerates to {start}.
struct GridSpec {
    enum class Scale { Linear, Log };

    double start = 0.0;
    double stop = 1.0;
    std::int64_t count = 2;
    Scale scale = Scale::Linear;

    /// Throws DomainError unless start < stop (or count == 1), count >= 1,
    /// both endpoints finite, and start > 0 for Log scale.
    void validate() const;

    /// Materialize the grid. Endpoints are exact; interior points are
    /// computed from the closed form (no incremental accumulation).
    std::vector<double> points() const;

    /// "log:0.01:100:400" / "linear:0.001:0.999:500" round-trip format.
    std::string to_string() const;
    static GridSpec parse(const std::string& text);
};

} // namespace qg
