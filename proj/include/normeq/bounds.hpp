#ifndef NORMEQ_BOUNDS_HPP
#define NORMEQ_BOUNDS_HPP

#include <vector>

#include "normeq/induced_norms.hpp"

namespace normeq {

/// Tolerances and evaluation knobs shared by the inequality and class checks.
struct CheckOptions {
    double tol_exact = kDefaultTol;   // both norms exact
    double tol_estimated = 1e-4;      // at least one norm estimated
    EstimatorConfig estimator{};
    /// When positive, estimated norms are also run through norm_bruteforce
    /// with this many samples and the larger value is kept.
    std::size_t oracle_budget = 0;
};

/// induced_norm, optionally reinforced by the sampling oracle.
NormResult evaluate_norm(const Matrix& a, ExtIndex p, ExtIndex q, const CheckOptions& opts = {});

/// m^{[(1/p)-(1/r)]_+} · n^{[(1/s)-(1/q)]_+}
double bound_factor(ExtIndex p, ExtIndex q, ExtIndex r, ExtIndex s, std::size_t m, std::size_t n);

struct BoundReport {
    double lhs = 0.0;        // ‖A‖_{r,s}
    double factor = 1.0;
    double rhs_norm = 0.0;   // ‖A‖_{p,q}
    double slack = 0.0;      // factor·rhs_norm - lhs
    bool equality = false;
    double tol = 0.0;        // tolerance actually applied
    Certainty lhs_certainty = Certainty::lower_bound_estimate;
    Certainty rhs_certainty = Certainty::lower_bound_estimate;

    double bound() const { return factor * rhs_norm; }
    bool exact() const { return is_exact(lhs_certainty) && is_exact(rhs_certainty); }
};

/// Evaluates both sides of ‖A‖_{r,s} ≤ factor·‖A‖_{p,q}. Equality means
/// |slack| ≤ tol·bound with tol = tol_exact on exact paths, tol_estimated otherwise.
BoundReport check_inequality(const Matrix& a, ExtIndex p, ExtIndex q, ExtIndex r, ExtIndex s,
                             const CheckOptions& opts = {});

/// Same report from norms that are already known.
BoundReport make_bound_report(const NormResult& rs, const NormResult& pq, double factor,
                              const CheckOptions& opts = {});

struct DualityReport {
    NormResult primal;   // ‖A‖_{p,q}
    NormResult adjoint;  // ‖A*‖_{q*,p*}
    double difference = 0.0;
    double allowed = 0.0;
    bool holds = false;
    bool exact() const { return is_exact(primal.certainty) && is_exact(adjoint.certainty); }
};

/// ‖A*‖_{q*,p*} = ‖A‖_{p,q}: relative tol_exact when both sides are exact,
/// tol_estimated otherwise.
DualityReport duality_check(const Matrix& a, ExtIndex p, ExtIndex q, const CheckOptions& opts = {});

struct MonotonicityReport {
    bool holds = true;
    double worst = 0.0;               // largest relative violation seen
    std::vector<NormResult> norms;    // one per grid point
};

/// Fixed s, increasing r: ‖A‖_{r,s} nondecreasing and m^{1/r}‖A‖_{r,s} nonincreasing.
MonotonicityReport monotonicity_check(const Matrix& a, ExtIndex s_fixed, const std::vector<ExtIndex>& r_grid,
                                      const CheckOptions& opts = {});

/// Fixed r, increasing s: n^{-1/s}‖A‖_{r,s} nondecreasing and ‖A‖_{r,s} nonincreasing.
MonotonicityReport monotonicity_check_in_s(const Matrix& a, ExtIndex r_fixed, const std::vector<ExtIndex>& s_grid,
                                           const CheckOptions& opts = {});

/// Pure sign logic: equality at (r,s) carries over to (r2,s2) when
/// sgn(p-r2) = sgn(p-r) and sgn(q-s2) = sgn(q-s).
bool prop3_transfer(ExtIndex p, ExtIndex q, ExtIndex r, ExtIndex s, ExtIndex r2, ExtIndex s2);

struct UpperBound {
    double value = 0.0;
    ExtIndex anchor_p;
    ExtIndex anchor_q;
    bool found = false;
};

/// Certified upper bound on ‖A‖_{p,q}: the smallest factor·‖A‖_{p',q'} over
/// anchors (p',q') ∈ {1,2,∞,p}×{1,2,∞,q} whose norm is exactly computable.
UpperBound norm_upper_bound(const Matrix& a, ExtIndex p, ExtIndex q);

} // namespace normeq

#endif // NORMEQ_BOUNDS_HPP
