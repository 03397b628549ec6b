#include "normeq/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace normeq {

NormResult evaluate_norm(const Matrix& a, ExtIndex p, ExtIndex q, const CheckOptions& opts)
{
    NormResult r = induced_norm(a, p, q, opts.estimator);
    if (!is_exact(r.certainty) && opts.oracle_budget > 0) {
        NormResult o = norm_bruteforce(a, p, q, opts.oracle_budget, opts.estimator.seed);
        if (o.value > r.value)
            r = std::move(o);
    }
    return r;
}

double bound_factor(ExtIndex p, ExtIndex q, ExtIndex r, ExtIndex s, std::size_t m, std::size_t n)
{
    const double em = positive_part(p.reciprocal() - r.reciprocal());
    const double en = positive_part(s.reciprocal() - q.reciprocal());
    double f = 1.0;
    if (em > 0.0)
        f *= std::pow(static_cast<double>(m), em);
    if (en > 0.0)
        f *= std::pow(static_cast<double>(n), en);
    return f;
}

BoundReport make_bound_report(const NormResult& rs, const NormResult& pq, double factor, const CheckOptions& opts)
{
    BoundReport rep;
    rep.lhs = rs.value;
    rep.rhs_norm = pq.value;
    rep.factor = factor;
    rep.lhs_certainty = rs.certainty;
    rep.rhs_certainty = pq.certainty;
    rep.slack = rep.bound() - rep.lhs;
    rep.tol = rep.exact() ? opts.tol_exact : opts.tol_estimated;
    // absolute floor so that A = 0 counts as equality
    rep.equality = std::abs(rep.slack) <= rep.tol * rep.bound() + 1e-300;
    return rep;
}

BoundReport check_inequality(const Matrix& a, ExtIndex p, ExtIndex q, ExtIndex r, ExtIndex s, const CheckOptions& opts)
{
    const NormResult rs = evaluate_norm(a, r, s, opts);
    const NormResult pq = evaluate_norm(a, p, q, opts);
    return make_bound_report(rs, pq, bound_factor(p, q, r, s, a.cols(), a.rows()), opts);
}

DualityReport duality_check(const Matrix& a, ExtIndex p, ExtIndex q, const CheckOptions& opts)
{
    DualityReport rep;
    rep.primal = evaluate_norm(a, p, q, opts);
    rep.adjoint = evaluate_norm(a.adjoint(), conjugate(q), conjugate(p), opts);
    rep.difference = std::abs(rep.primal.value - rep.adjoint.value);
    const double scale = std::max(rep.primal.value, rep.adjoint.value);
    rep.allowed = (rep.exact() ? opts.tol_exact : opts.tol_estimated) * scale;
    rep.holds = rep.difference <= rep.allowed + 1e-300;
    return rep;
}

namespace {

// Checks f nondecreasing and g nonincreasing along the grid, pairwise.
MonotonicityReport monotone_pairs(std::vector<NormResult> norms, const std::vector<double>& weight_up,
                                  const std::vector<double>& weight_down, const CheckOptions& opts)
{
    MonotonicityReport rep;
    for (std::size_t i = 0; i < norms.size(); ++i) {
        for (std::size_t j = i + 1; j < norms.size(); ++j) {
            const bool exact = is_exact(norms[i].certainty) && is_exact(norms[j].certainty);
            const double tol = exact ? opts.tol_exact : opts.tol_estimated;
            const double fi = weight_up[i] * norms[i].value;
            const double fj = weight_up[j] * norms[j].value;
            const double gi = weight_down[i] * norms[i].value;
            const double gj = weight_down[j] * norms[j].value;
            const double up_violation = fi > 0.0 ? (fi - fj) / fi : 0.0;
            const double down_violation = gi > 0.0 ? (gj - gi) / gi : 0.0;
            const double worst = std::max(up_violation, down_violation);
            rep.worst = std::max(rep.worst, worst);
            if (worst > tol)
                rep.holds = false;
        }
    }
    rep.norms = std::move(norms);
    return rep;
}

void require_sorted(const std::vector<ExtIndex>& grid)
{
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw PreconditionError("monotonicity grid must be sorted ascending");
}

} // namespace

MonotonicityReport monotonicity_check(const Matrix& a, ExtIndex s_fixed, const std::vector<ExtIndex>& r_grid,
                                      const CheckOptions& opts)
{
    require_sorted(r_grid);
    std::vector<NormResult> norms;
    std::vector<double> up;
    std::vector<double> down;
    const double m = static_cast<double>(a.cols());
    for (const auto& r : r_grid) {
        norms.push_back(evaluate_norm(a, r, s_fixed, opts));
        up.push_back(1.0);
        down.push_back(std::pow(m, r.reciprocal()));
    }
    return monotone_pairs(std::move(norms), up, down, opts);
}

MonotonicityReport monotonicity_check_in_s(const Matrix& a, ExtIndex r_fixed, const std::vector<ExtIndex>& s_grid,
                                           const CheckOptions& opts)
{
    require_sorted(s_grid);
    std::vector<NormResult> norms;
    std::vector<double> up;
    std::vector<double> down;
    const double n = static_cast<double>(a.rows());
    for (const auto& s : s_grid) {
        norms.push_back(evaluate_norm(a, r_fixed, s, opts));
        up.push_back(std::pow(n, -s.reciprocal()));
        down.push_back(1.0);
    }
    return monotone_pairs(std::move(norms), up, down, opts);
}

bool prop3_transfer(ExtIndex p, ExtIndex q, ExtIndex r, ExtIndex s, ExtIndex r2, ExtIndex s2)
{
    return sign_of_difference(p, r2) == sign_of_difference(p, r)
        && sign_of_difference(q, s2) == sign_of_difference(q, s);
}

UpperBound norm_upper_bound(const Matrix& a, ExtIndex p, ExtIndex q)
{
    const ExtIndex ps[] = {ExtIndex::one(), ExtIndex::two(), ExtIndex::infinity(), p};
    const ExtIndex qs[] = {ExtIndex::one(), ExtIndex::two(), ExtIndex::infinity(), q};
    const bool real_enum = a.is_real() && std::min(a.rows(), a.cols()) <= 16;
    UpperBound best;
    for (const auto& pp : ps) {
        for (const auto& qq : qs) {
            const bool closed = pp.is_one() || qq.is_infinite() || (pp.is_two() && qq.is_two())
                             || a.rows() == 1 || a.cols() == 1;
            const bool enumerable = real_enum
                && ((pp.is_infinite() && a.cols() <= 16) || (qq.is_one() && a.rows() <= 16));
            if (!closed && !enumerable)
                continue;
            const NormResult r = induced_norm(a, pp, qq);
            if (!is_exact(r.certainty))
                continue;
            const double v = bound_factor(pp, qq, p, q, a.cols(), a.rows()) * r.value;
            if (!best.found || v < best.value) {
                best.value = v;
                best.anchor_p = pp;
                best.anchor_q = qq;
                best.found = true;
            }
        }
    }
    return best;
}

} // namespace normeq
