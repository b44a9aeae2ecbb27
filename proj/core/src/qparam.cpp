#include "qgamma/qparam.hpp"

#include <cmath>
#include <string>

namespace qg {

QParam::QParam(double q) {
    if (!std::isfinite(q) || !(q > 0.0) || !(q < 1.0)) {
        throw DomainError("QParam: q must be finite and strictly inside (0,1), got " +
                          std::to_string(q));
    }
    q_ = q;
    ln_q_ = std::log(q);
    one_minus_q_ = 1.0 - q;
}

double QParam::pow(double x) const noexcept { return std::pow(q_, x); }

} // namespace qg
