#include "qgamma/grid.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "qgamma/policy.hpp"

namespace qg {

namespace {

// Shortest round-trip decimal form, so parse(to_string(g)) == g exactly.
std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s, const char* what) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw DomainError(std::string("GridSpec: bad ") + what + " '" + s + "'");
    }
    return v;
}

std::int64_t parse_count(const std::string& s) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw DomainError("GridSpec: bad count '" + s + "'");
    }
    return v;
}

} // namespace

void GridSpec::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop)) {
        throw DomainError("GridSpec: endpoints must be finite");
    }
    if (count < 1) {
        throw DomainError("GridSpec: count must be >= 1");
    }
    if (count > 1 && !(start < stop)) {
        throw DomainError("GridSpec: start must be < stop");
    }
    if (count == 1 && !(start <= stop)) {
        throw DomainError("GridSpec: start must be <= stop");
    }
    if (scale == Scale::Log && !(start > 0.0)) {
        throw DomainError("GridSpec: log scale requires start > 0");
    }
}

std::vector<double> GridSpec::points() const {
    validate();
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        xs.push_back(start);
        return xs;
    }
    const double denom = static_cast<double>(count - 1);
    if (scale == Scale::Linear) {
        for (std::int64_t i = 0; i < count; ++i) {
            if (i == 0) {
                xs.push_back(start);
            } else if (i == count - 1) {
                xs.push_back(stop);
            } else {
                const double t = static_cast<double>(i) / denom;
                xs.push_back(start + (stop - start) * t);
            }
        }
    } else {
        const double la = std::log(start);
        const double lb = std::log(stop);
        for (std::int64_t i = 0; i < count; ++i) {
            if (i == 0) {
                xs.push_back(start);
            } else if (i == count - 1) {
                xs.push_back(stop);
            } else {
                const double t = static_cast<double>(i) / denom;
                xs.push_back(std::exp(la + (lb - la) * t));
            }
        }
    }
    return xs;
}

std::string GridSpec::to_string() const {
    const char* s = (scale == Scale::Linear) ? "linear" : "log";
    return std::string(s) + ":" + format_double(start) + ":" +
           format_double(stop) + ":" + std::to_string(count);
}

GridSpec GridSpec::parse(const std::string& text) {
    std::string parts[4];
    std::size_t n_parts = 0;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ':') {
            if (n_parts >= 4) {
                throw DomainError("GridSpec: expected scale:start:stop:count, got '" +
                                  text + "'");
            }
            parts[n_parts++] = text.substr(begin, i - begin);
            begin = i + 1;
        }
    }
    if (n_parts != 4) {
        throw DomainError("GridSpec: expected scale:start:stop:count, got '" +
                          text + "'");
    }
    GridSpec g;
    if (parts[0] == "linear") {
        g.scale = Scale::Linear;
    } else if (parts[0] == "log") {
        g.scale = Scale::Log;
    } else {
        throw DomainError("GridSpec: scale must be 'linear' or 'log', got '" +
                          parts[0] + "'");
    }
    g.start = parse_double(parts[1], "start");
    g.stop = parse_double(parts[2], "stop");
    g.count = parse_count(parts[3]);
    g.validate();
    return g;
}

} // namespace qg
