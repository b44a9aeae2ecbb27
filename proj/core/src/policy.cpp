#include "qgamma/policy.hpp"

#include <cmath>

namespace qg {

void SeriesPolicy::validate() const {
    if (!std::isfinite(rel_tol) || !(rel_tol > 0.0)) {
        throw DomainError("SeriesPolicy: rel_tol must be finite and > 0");
    }
    if (max_terms < 1) {
        throw DomainError("SeriesPolicy: max_terms must be >= 1");
    }
    if (!std::isfinite(underflow_floor) || !(underflow_floor >= 0.0)) {
        throw DomainError("SeriesPolicy: underflow_floor must be finite and >= 0");
    }
}

} // namespace qg
