#include "normeq/induced_norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace normeq {

std::string_view to_string(Certainty c)
{
    switch (c) {
    case Certainty::exact_closed_form: return "exact-closed-form";
    case Certainty::exact_enumeration: return "exact-enumeration";
    case Certainty::lower_bound_estimate: return "lower-bound-estimate";
    }
    return "?";
}

double norm_ratio(const Matrix& a, std::span<const Scalar> x, ExtIndex p, ExtIndex q)
{
    const double den = vector_norm(x, p);
    if (den == 0.0)
        return 0.0;
    return vector_norm(a.apply(x), q) / den;
}

namespace {

constexpr std::size_t kMaxRealEnumeration = 24;
constexpr std::size_t kMaxComplexGrid = 6;
constexpr std::size_t kGridPoints = 1u << 16;

void normalize(Vector& x, ExtIndex p)
{
    const double nrm = vector_norm(x, p);
    if (nrm > 0.0)
        for (auto& v : x)
            v /= nrm;
}

Vector coordinate(std::size_t dim, std::size_t k)
{
    Vector e(dim);
    e[k] = 1.0;
    return e;
}

NormResult make_result(const Matrix& a, Vector witness, ExtIndex p, ExtIndex q, Certainty c)
{
    normalize(witness, p);
    NormResult r;
    r.value = norm_ratio(a, witness, p, q);
    r.witness = std::move(witness);
    r.certainty = c;
    return r;
}

Vector random_vector(std::size_t dim, Field field, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss;
    Vector x(dim);
    for (auto& v : x)
        v = field == Field::real ? Scalar(gauss(rng), 0.0) : Scalar(gauss(rng), gauss(rng));
    return x;
}

Vector random_phases(std::size_t dim, Field field, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unif(0.0, 2.0 * std::numbers::pi);
    Vector x(dim);
    for (auto& v : x) {
        if (field == Field::real)
            v = (rng() & 1u) ? 1.0 : -1.0;
        else
            v = std::polar(1.0, unif(rng));
    }
    return x;
}

// Gray-code walk over x ∈ {±1}^m with x_0 = +1; returns the best vertex.
Vector best_sign_vertex(const Matrix& a, ExtIndex q)
{
    const std::size_t m = a.cols();
    const std::size_t n = a.rows();
    Vector x(m, 1.0);
    Vector y = a.apply(x);
    Vector best = x;
    double best_val = vector_norm(y, q);
    const std::uint64_t count = std::uint64_t{1} << (m - 1);
    for (std::uint64_t k = 1; k < count; ++k) {
        // flip coordinate 1 + ctz(k); coordinate 0 stays fixed
        const std::size_t j = 1 + static_cast<std::size_t>(__builtin_ctzll(k));
        const double s = x[j].real();
        for (std::size_t i = 0; i < n; ++i)
            y[i] -= 2.0 * s * a(i, j);
        x[j] = -s;
        const double val = vector_norm(y, q);
        if (val > best_val) {
            best_val = val;
            best = x;
        }
    }
    return best;
}

struct Candidate {
    double value;
    Vector x;
};

// Phase grid over x ∈ T^m with x_0 = 1 for max ‖Ax‖_q; returns the best few.
std::vector<Candidate> phase_grid_candidates(const Matrix& a, ExtIndex q, std::size_t keep)
{
    const std::size_t m = a.cols();
    std::size_t per = 2;
    if (m > 1) {
        per = static_cast<std::size_t>(std::floor(std::pow(double(kGridPoints), 1.0 / double(m - 1))));
        per = std::clamp<std::size_t>(per, 4, 256);
    }
    std::vector<Scalar> roots(per);
    for (std::size_t k = 0; k < per; ++k)
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(per));

    std::vector<Candidate> best;
    std::vector<std::size_t> digits(m, 0);
    Vector x(m, 1.0);
    while (true) {
        for (std::size_t j = 1; j < m; ++j)
            x[j] = roots[digits[j]];
        const double val = vector_norm(a.apply(x), q);
        if (best.size() < keep || val > best.back().value) {
            best.push_back({val, x});
            std::sort(best.begin(), best.end(),
                      [](const Candidate& l, const Candidate& r) { return l.value > r.value; });
            if (best.size() > keep)
                best.pop_back();
        }
        std::size_t j = 1;
        while (j < m && ++digits[j] == per) {
            digits[j] = 0;
            ++j;
        }
        if (j >= m)
            break;
    }
    return best;
}

NormResult polish_best(const Matrix& a, ExtIndex p, ExtIndex q, const std::vector<Candidate>& cands)
{
    NormResult best;
    best.witness = coordinate(a.cols(), 0);
    best.value = norm_ratio(a, best.witness, p, q);
    for (const auto& c : cands) {
        NormResult r = ascend(a, p, q, c.x, 200, 1e-13);
        if (r.value > best.value)
            best = std::move(r);
    }
    return best;
}

// Complex ‖A‖_{∞,q} by phase grid + ascent.
NormResult complex_infinity_grid(const Matrix& a, ExtIndex q)
{
    return polish_best(a, ExtIndex::infinity(), q, phase_grid_candidates(a, q, 8));
}

// Complex ‖A‖_{p,1} through the adjoint: max over phase vectors y of ‖A*y‖_{p*}.
NormResult complex_one_target_grid(const Matrix& a, ExtIndex p)
{
    const Matrix adj = a.adjoint();
    auto cands = phase_grid_candidates(adj, conjugate(p), 8);
    std::vector<Candidate> primal;
    for (const auto& c : cands)
        primal.push_back({c.value, dual_direction(adj.apply(c.x), p)});
    return polish_best(a, p, ExtIndex::one(), primal);
}

} // namespace

Vector dual_direction(std::span<const Scalar> z, ExtIndex p)
{
    const std::size_t m = z.size();
    Vector x(m);
    if (p.is_one()) {
        std::size_t best = 0;
        double big = -1.0;
        for (std::size_t i = 0; i < m; ++i)
            if (std::abs(z[i]) > big) {
                big = std::abs(z[i]);
                best = i;
            }
        x[best] = phase(z[best]);
        return x;
    }
    if (p.is_infinite()) {
        for (std::size_t i = 0; i < m; ++i)
            x[i] = phase(z[i]);
        return x;
    }
    const double e = conjugate(p).value() - 1.0;
    double largest = 0.0;
    for (const auto& v : z)
        largest = std::max(largest, std::abs(v));
    if (largest == 0.0) {
        x[0] = 1.0;
        return x;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const double a = std::abs(z[i]);
        x[i] = a == 0.0 ? Scalar{} : phase(z[i]) * (p.is_two() ? a / largest : std::pow(a / largest, e));
    }
    normalize(x, p);
    return x;
}

NormResult ascend(const Matrix& a, ExtIndex p, ExtIndex q, Vector start, int max_iter, double tol)
{
    const ExtIndex q_dual = conjugate(q);
    normalize(start, p);
    NormResult best;
    best.certainty = Certainty::lower_bound_estimate;
    best.value = norm_ratio(a, start, p, q);
    best.witness = start;

    Vector x = std::move(start);
    double current = best.value;
    for (int it = 0; it < max_iter; ++it) {
        const Vector y = a.apply(x);
        if (vector_norm(y, ExtIndex::infinity()) == 0.0)
            break;
        const Vector w = dual_direction(y, q_dual);
        const Vector z = a.apply_adjoint(w);
        if (vector_norm(z, ExtIndex::infinity()) == 0.0)
            break;
        x = dual_direction(z, p);
        const double next = norm_ratio(a, x, p, q);
        if (next > best.value) {
            best.value = next;
            best.witness = x;
        }
        if (next <= current * (1.0 + tol))
            break;
        current = next;
    }
    return best;
}

NormResult spectral_norm(const Matrix& a)
{
    const SvdFactors f = svd(a);
    Vector v = f.V.column(0);
    NormResult r;
    r.value = f.singular.front();
    r.witness = std::move(v);
    r.certainty = Certainty::exact_closed_form;
    return r;
}

std::optional<NormResult> norm_closed_form(const Matrix& a, ExtIndex p, ExtIndex q)
{
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();

    if (p.is_one() || m == 1) {
        std::size_t best = 0;
        double best_val = -1.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double v = vector_norm(a.column(j), q);
            if (v > best_val) {
                best_val = v;
                best = j;
            }
        }
        NormResult r;
        r.value = best_val;
        r.witness = coordinate(m, best);
        r.certainty = Certainty::exact_closed_form;
        return r;
    }

    if (q.is_infinite() || n == 1) {
        const ExtIndex p_dual = conjugate(p);
        std::size_t best = 0;
        double best_val = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = vector_norm(a.row(i), p_dual);
            if (v > best_val) {
                best_val = v;
                best = i;
            }
        }
        Vector conj_row = a.row(best);
        for (auto& v : conj_row)
            v = std::conj(v);
        NormResult r;
        r.value = best_val;
        r.witness = dual_direction(conj_row, p);
        r.certainty = Certainty::exact_closed_form;
        return r;
    }

    if (p.is_two() && q.is_two())
        return spectral_norm(a);

    return std::nullopt;
}

NormResult norm_infty_q_real(const Matrix& a, ExtIndex q)
{
    if (!a.is_real())
        throw PreconditionError("sign-vector enumeration needs a real-field matrix");
    if (a.cols() > kMaxRealEnumeration)
        throw DimensionTooLarge("sign-vector enumeration limited to 24 columns");
    return make_result(a, best_sign_vertex(a, q), ExtIndex::infinity(), q, Certainty::exact_enumeration);
}

NormResult norm_infty_one_exact(const Matrix& a)
{
    if (a.is_real())
        return norm_infty_q_real(a, ExtIndex::one());
    if (a.cols() > kMaxComplexGrid)
        throw DimensionTooLarge("complex phase search for the (inf,1) norm limited to 6 columns");
    NormResult grid = complex_infinity_grid(a, ExtIndex::one());
    NormResult est = norm_estimate(a, ExtIndex::infinity(), ExtIndex::one());
    return est.value > grid.value ? est : grid;
}

NormResult norm_estimate(const Matrix& a, ExtIndex p, ExtIndex q, const EstimatorConfig& cfg)
{
    if (auto closed = norm_closed_form(a, p, q))
        return *closed;

    const std::size_t m = a.cols();
    std::mt19937_64 rng(cfg.seed);
    std::vector<Vector> starts;
    for (int k = 0; k < cfg.random_starts; ++k)
        starts.push_back(random_vector(m, a.field(), rng));
    for (std::size_t j = 0; j < m; ++j)
        starts.push_back(coordinate(m, j));
    starts.emplace_back(m, 1.0);

    NormResult best;
    best.value = -1.0;
    for (auto& s : starts) {
        NormResult r = ascend(a, p, q, std::move(s), cfg.max_iter, cfg.tol);
        if (r.value > best.value)
            best = std::move(r);
    }
    best.certainty = Certainty::lower_bound_estimate;
    return best;
}

NormResult norm_bruteforce(const Matrix& a, ExtIndex p, ExtIndex q, std::size_t budget, std::uint64_t seed)
{
    const std::size_t m = a.cols();
    const Field field = a.field();
    std::mt19937_64 rng(seed);

    std::vector<Candidate> top;
    const std::size_t keep = 10;
    auto consider = [&](const Vector& x) {
        const double val = norm_ratio(a, x, p, q);
        if (top.size() < keep || val > top.back().value) {
            top.push_back({val, x});
            std::sort(top.begin(), top.end(),
                      [](const Candidate& l, const Candidate& r) { return l.value > r.value; });
            if (top.size() > keep)
                top.pop_back();
        }
    };

    // deterministic grid: each coordinate ranges over a fixed set of scalars
    std::vector<Scalar> levels;
    const std::size_t grid_budget = budget / 2;
    const std::size_t per = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::floor(std::pow(double(std::max<std::size_t>(grid_budget, 2)), 1.0 / double(m)))));
    if (field == Field::real) {
        for (std::size_t k = 0; k < per; ++k)
            levels.emplace_back(-1.0 + 2.0 * double(k) / double(per - 1), 0.0);
    } else {
        const std::size_t cells = per > 1 ? per - 1 : 1;
        const std::size_t radial = std::max<std::size_t>(2, static_cast<std::size_t>(std::sqrt(double(cells))));
        const std::size_t angular = std::max<std::size_t>(2, cells / radial);
        levels.emplace_back(0.0, 0.0);
        for (std::size_t r = 1; r <= radial; ++r)
            for (std::size_t t = 0; t < angular; ++t)
                levels.push_back(std::polar(double(r) / double(radial),
                                            2.0 * std::numbers::pi * double(t) / double(angular)));
    }
    std::size_t grid_count = 1;
    for (std::size_t j = 0; j < m && grid_count <= grid_budget; ++j)
        grid_count *= levels.size();
    if (grid_count <= grid_budget) {
        std::vector<std::size_t> digits(m, 0);
        Vector x(m);
        while (true) {
            for (std::size_t j = 0; j < m; ++j)
                x[j] = levels[digits[j]];
            if (vector_norm(x, ExtIndex::infinity()) > 0.0)
                consider(x);
            std::size_t j = 0;
            while (j < m && ++digits[j] == levels.size()) {
                digits[j] = 0;
                ++j;
            }
            if (j == m)
                break;
        }
    } else {
        grid_count = 0;
    }

    // random sphere points: dense, phase-only and sparse
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t k = grid_count; k < budget; ++k) {
        Vector x;
        switch (k % 3) {
        case 0: x = random_vector(m, field, rng); break;
        case 1: x = random_phases(m, field, rng); break;
        default:
            x = random_vector(m, field, rng);
            for (std::size_t drop = pick(rng); drop > 0; --drop)
                x[pick(rng)] = 0.0;
            break;
        }
        if (vector_norm(x, ExtIndex::infinity()) > 0.0)
            consider(x);
    }

    NormResult best = polish_best(a, p, q, top);
    best.certainty = Certainty::lower_bound_estimate;
    return best;
}

NormResult induced_norm(const Matrix& a, ExtIndex p, ExtIndex q, const EstimatorConfig& cfg)
{
    if (auto closed = norm_closed_form(a, p, q))
        return *closed;

    const std::size_t m = a.cols();
    const std::size_t n = a.rows();
    if (a.is_real()) {
        const bool primal = p.is_infinite() && m <= kMaxRealEnumeration;
        const bool dual = q.is_one() && n <= kMaxRealEnumeration;
        if (primal && (!dual || m <= n))
            return norm_infty_q_real(a, q);
        if (dual) {
            const Matrix adj = a.adjoint();
            const Vector y = best_sign_vertex(adj, conjugate(p));
            return make_result(a, dual_direction(adj.apply(y), p), p, q, Certainty::exact_enumeration);
        }
    }

    NormResult best = norm_estimate(a, p, q, cfg);
    if (!a.is_real()) {
        if (p.is_infinite() && m <= kMaxComplexGrid) {
            NormResult g = complex_infinity_grid(a, q);
            if (g.value > best.value)
                best = std::move(g);
        } else if (q.is_one() && n <= kMaxComplexGrid) {
            NormResult g = complex_one_target_grid(a, p);
            if (g.value > best.value)
                best = std::move(g);
        }
    }
    best.certainty = Certainty::lower_bound_estimate;
    return best;
}

std::vector<Vector> maximizer_set_probe(const Matrix& a, ExtIndex p, ExtIndex q, std::size_t count,
                                        std::uint64_t seed)
{
    if (count == 0)
        throw PreconditionError("maximizer_set_probe: count must be positive");
    const std::size_t m = a.cols();
    std::vector<Vector> cands;

    if (p.is_one()) {
        for (std::size_t j = 0; j < m; ++j)
            cands.push_back(coordinate(m, j));
    }
    if (p.is_two() && q.is_two()) {
        const SvdFactors f = svd(a);
        const auto groups = cluster_eigenvalues(f.singular, 1e-9);
        const std::size_t top = groups.empty() ? 1 : groups.front().second;
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (std::size_t k = 0; k < top; ++k)
            cands.push_back(f.V.column(k));
        for (std::size_t t = 0; t < 4 * count && top > 1; ++t) {
            const Vector coef = random_vector(top, a.field(), rng);
            Vector x(m);
            for (std::size_t k = 0; k < top; ++k)
                for (std::size_t i = 0; i < m; ++i)
                    x[i] += coef[k] * f.V(i, k);
            cands.push_back(std::move(x));
        }
    }

    std::mt19937_64 rng(seed);
    const int starts = static_cast<int>(std::max<std::size_t>(32, 4 * count));
    for (int k = 0; k < starts; ++k)
        cands.push_back(ascend(a, p, q, random_vector(m, a.field(), rng), 200, 1e-12).witness);
    for (std::size_t j = 0; j < m; ++j)
        cands.push_back(ascend(a, p, q, coordinate(m, j), 200, 1e-12).witness);
    if (p.is_infinite() && !a.is_real() && m <= kMaxComplexGrid)
        for (auto& c : phase_grid_candidates(a, q, 8))
            cands.push_back(ascend(a, p, q, c.x, 200, 1e-13).witness);

    double best = 0.0;
    std::vector<double> ratios;
    for (auto& c : cands) {
        normalize(c, p);
        ratios.push_back(norm_ratio(a, c, p, q));
        best = std::max(best, ratios.back());
    }
    if (auto closed = norm_closed_form(a, p, q))
        best = std::max(best, closed->value);

    std::vector<Vector> out;
    for (std::size_t k = 0; k < cands.size() && out.size() < count; ++k) {
        if (ratios[k] < best * (1.0 - 1e-6))
            continue;
        const double nk = vector_norm(cands[k], ExtIndex::two());
        const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Vector& o) {
            return std::abs(inner(o, cands[k])) >= (1.0 - 1e-6) * nk * vector_norm(o, ExtIndex::two());
        });
        if (!duplicate)
            out.push_back(cands[k]);
    }
    return out;
}

} // namespace normeq
