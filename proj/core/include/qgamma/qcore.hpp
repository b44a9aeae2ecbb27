#pragma once

#include <cstdint>

#include "qgamma/policy.hpp"
#include "qgamma/qparam.hpp"

namespace qg {

/// q-bracket [x]_q = (1 - q^x)/(1 - q): the q-analogue of the number x.
/// Total for any finite real x (negative x permitted); [0]_q = 0, and the
/// map is strictly increasing in x. Evaluated via expm1 so it stays accurate
/// as q -> 1- where the naive numerator cancels.
double q_bracket(double x, const QParam& q);

/// ln [x]_q for x > 0, computed as log1p(-q^x) - log1p(-q) so the result
/// keeps full relative precision both for tiny x and deep in the tail where
/// q^x underflows the bracket's distance from its limit 1/(1-q).
double log_q_bracket(double x, const QParam& q);

/// Finite q-Pochhammer symbol (a;q)_n = prod_{i=0}^{n-1} (1 - a q^i).
/// n = 0 gives the empty product 1.
double q_pochhammer(double a, const QParam& q, std::int64_t n);

/// Infinite q-Pochhammer symbol (a;q)_inf = prod_{i>=0} (1 - a q^i),
/// truncated once |a| q^i < rel_tol * (1-q), which bounds the neglected
/// log-tail by the geometric series sum_{j>=i} |a| q^j. Factors within
/// (0, 2) accumulate as log1p terms; the finitely many factors <= 0
/// (possible when a >= 1) contribute sign and log-magnitude directly.
/// An exact zero factor short-circuits to 0.
double q_pochhammer_inf(double a, const QParam& q,
                        const SeriesPolicy& policy = {});

/// ln (a;q)_inf for a < 1 (all factors positive). a >= 1 raises DomainError.
double log_q_pochhammer_inf(double a, const QParam& q,
                            const SeriesPolicy& policy = {});

/// q-factorial [n]_q! = (q;q)_n / (1-q)^n = prod_{k=1}^{n} [k]_q.
double q_factorial(std::int64_t n, const QParam& q);

/// q-exponential E_q^t = sum_n q^{n(n-1)/2} t^n/[n]_q! = (-(1-q)t; q)_inf.
/// Always evaluated through the product form: for t <= 0 the series
/// alternates and is numerically unusable, while the product is stable for
/// every finite t. E_q^0 = 1 exactly.
double q_exp_E(double t, const QParam& q, const SeriesPolicy& policy = {});

/// Series form of E_q^t, kept as an independent cross-check of q_exp_E for
/// t >= 0 (all terms positive there). Raises DomainError for t < 0.
double q_exp_E_series(double t, const QParam& q,
                      const SeriesPolicy& policy = {});

} // namespace qg
