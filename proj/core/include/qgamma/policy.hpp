#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qg {

/// Truncation policy shared by every infinite product, series, and
/// q-integral in the library. Defaults assume IEEE double (>= 15
/// significant decimal digits).
struct SeriesPolicy {
    /// Relative truncation target for the quantity being accumulated.
    double rel_tol = 1e-13;
    /// Hard cap on accumulated terms; exceeding it raises ConvergenceError.
    std::int64_t max_terms = 10'000'000;
    /// Magnitudes below this are treated as converged outright.
    double underflow_floor = 1e-300;

    /// Throws qg::DomainError if the policy is unusable.
    void validate() const;
};

/// Input outside a function's mathematical domain (bad q, x <= 0, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Linear-domain result too large for the working type. Distinct from
/// DomainError so callers can tell "wrong input" from "use the log form".
class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

/// A truncated sum/product hit SeriesPolicy::max_terms while its tail was
/// still above tolerance. Carries the partial value so callers can inspect
/// how far the accumulation got.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double partial_value,
                     std::int64_t terms_used)
        : std::runtime_error(what), partial_(partial_value), terms_(terms_used) {}

    double partial_value() const noexcept { return partial_; }
    std::int64_t terms_used() const noexcept { return terms_; }

  private:
    double partial_;
    std::int64_t terms_;
};

/// An integrand returned a non-finite value at a quadrature sample point.
class EvaluationError : public std::runtime_error {
  public:
    EvaluationError(const std::string& what, std::int64_t sample_index,
                    double sample_point)
        : std::runtime_error(what), index_(sample_index), point_(sample_point) {}

    std::int64_t sample_index() const noexcept { return index_; }
    double sample_point() const noexcept { return point_; }

  private:
    std::int64_t index_;
    double point_;
};

namespace detail {

/// Kahan–Neumaier compensated accumulator. All long summations in the
/// library run through this so results are deterministic and the rounding
/// error stays O(ulp) independent of term count.
class KahanSum {
  public:
    void add(double term) noexcept {
        double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term)) {
            comp_ += (sum_ - t) + term;
        } else {
            comp_ += (term - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace detail

} // namespace qg
