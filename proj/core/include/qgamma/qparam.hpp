#pragma once

#include "qgamma/policy.hpp"

namespace qg {

/// Validated deformation parameter q from the open interval (0,1), with the
/// two derived quantities every formula needs (ln q and 1-q) computed once.
class QParam {
  public:
    /// Rejects non-finite q and anything outside (0,1) strictly.
    explicit QParam(double q);

    double q() const noexcept { return q_; }
    /// ln q, always negative.
    double ln_q() const noexcept { return ln_q_; }
    /// 1 - q, in (0,1); exact in IEEE arithmetic for q in [0.5, 1).
    double one_minus_q() const noexcept { return one_minus_q_; }

    /// q^x for arbitrary real x.
    double pow(double x) const noexcept;

  private:
    double q_;
    double ln_q_;
    double one_minus_q_;
};

} // namespace qg
