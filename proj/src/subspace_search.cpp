#include "normeq/subspace_search.hpp"

#include <cmath>
#include <random>

namespace normeq {

namespace {

constexpr std::size_t kMaxSignEnumeration = 20;
constexpr int kProjectionStarts = 64;
constexpr int kProjectionIters = 3000;
constexpr int kPolishIters = 60;

void normalize2(Vector& x)
{
    const double nrm = vector_norm(x, ExtIndex::two());
    if (nrm > 0.0)
        for (auto& z : x)
            z /= nrm;
}

Vector constant_modulus(const Vector& x)
{
    Vector out(x.size());
    const double scale = 1.0 / std::sqrt(static_cast<double>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = phase(x[i]) * scale;
    return out;
}

struct Isometry {
    const std::vector<Vector>& domain;
    std::vector<Vector> image;
    const Matrix& map;

    Vector forward(const Vector& v) const { return map.apply(v); }

    Vector backward(const Vector& u) const
    {
        Vector v(domain.front().size());
        for (std::size_t l = 0; l < domain.size(); ++l) {
            const Scalar c = inner(image[l], u);
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] += c * domain[l][i];
        }
        return v;
    }
};

bool accept(const Isometry& iso, const Vector& v, KClass kv, KClass ku, double tol)
{
    return k_class_test(v, kv, tol) && k_class_test(iso.forward(v), ku, tol);
}

// A coordinate vector lying in span(basis), mapped back to the domain.
SubspaceSearchResult coordinate_search(const Isometry& iso, bool on_image, KClass kv, KClass ku, double tol)
{
    const std::vector<Vector>& basis = on_image ? iso.image : iso.domain;
    const std::size_t dim = basis.front().size();
    for (std::size_t k = 0; k < dim; ++k) {
        double captured = 0.0;
        for (const auto& b : basis)
            captured += std::norm(b[k]);
        if (captured < 1.0 - tol)
            continue;
        Vector e(dim);
        e[k] = 1.0;
        Vector v = on_image ? iso.backward(project(basis, e)) : project(basis, e);
        normalize2(v);
        if (accept(iso, v, kv, ku, tol))
            return {std::move(v), true};
    }
    return {std::nullopt, true};
}

// Real sign vectors s with s ∈ span(basis); Gray-code walk on the projection coefficients.
SubspaceSearchResult sign_search(const Isometry& iso, bool on_image, KClass kv, KClass ku, double tol)
{
    const std::vector<Vector>& basis = on_image ? iso.image : iso.domain;
    const std::size_t dim = basis.front().size();
    const std::size_t d = basis.size();
    Vector s(dim, 1.0);
    std::vector<Scalar> coef(d);
    for (std::size_t l = 0; l < d; ++l)
        coef[l] = inner(basis[l], s);

    auto try_current = [&]() -> std::optional<Vector> {
        double captured = 0.0;
        for (const auto& c : coef)
            captured += std::norm(c);
        if (captured < (1.0 - tol) * static_cast<double>(dim))
            return std::nullopt;
        Vector v = on_image ? iso.backward(s) : project(basis, s);
        normalize2(v);
        if (accept(iso, v, kv, ku, tol))
            return v;
        return std::nullopt;
    };

    if (auto v = try_current())
        return {std::move(v), true};
    const std::uint64_t count = std::uint64_t{1} << (dim - 1);
    for (std::uint64_t k = 1; k < count; ++k) {
        const std::size_t j = 1 + static_cast<std::size_t>(__builtin_ctzll(k));
        const double old = s[j].real();
        for (std::size_t l = 0; l < d; ++l)
            coef[l] -= 2.0 * old * std::conj(basis[l][j]);
        s[j] = -old;
        if (auto v = try_current())
            return {std::move(v), true};
    }
    return {std::nullopt, true};
}

// Levenberg-Marquardt on the subspace coefficients for |v_i|² = 1/m and
// |(map v)_i|² = 1/n on the K1 sides; minimum-norm steps.
Vector newton_polish(const Isometry& iso, Vector v, KClass kv, KClass ku)
{
    const std::size_t d = iso.domain.size();
    const std::size_t m = iso.domain.front().size();
    const std::size_t n = iso.image.front().size();
    std::vector<Scalar> c(d);
    for (std::size_t l = 0; l < d; ++l)
        c[l] = inner(iso.domain[l], v);

    struct Row {
        const std::vector<Vector>* basis;
        std::size_t index;
        double target;
    };
    std::vector<Row> rows;
    if (kv == KClass::K1)
        for (std::size_t i = 0; i < m; ++i)
            rows.push_back({&iso.domain, i, 1.0 / static_cast<double>(m)});
    if (ku == KClass::K1)
        for (std::size_t i = 0; i < n; ++i)
            rows.push_back({&iso.image, i, 1.0 / static_cast<double>(n)});
    const std::size_t k = rows.size();
    const std::size_t p = 2 * d;

    for (int it = 0; it < kPolishIters; ++it) {
        std::vector<double> r(k);
        std::vector<double> jac(k * p);
        double res = 0.0;
        for (std::size_t a = 0; a < k; ++a) {
            const auto& basis = *rows[a].basis;
            Scalar x{};
            for (std::size_t l = 0; l < d; ++l)
                x += c[l] * basis[l][rows[a].index];
            r[a] = std::norm(x) - rows[a].target;
            res = std::max(res, std::abs(r[a]));
            for (std::size_t l = 0; l < d; ++l) {
                const Scalar g = std::conj(x) * basis[l][rows[a].index];
                jac[a * p + 2 * l] = 2.0 * g.real();
                jac[a * p + 2 * l + 1] = -2.0 * g.imag();
            }
        }
        if (res < 1e-15)
            break;
        // (J Jᵀ + μI) y = r, step = Jᵀ y
        const double mu = 1e-14;
        std::vector<double> g(k * k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                double acc = a == b ? mu : 0.0;
                for (std::size_t t = 0; t < p; ++t)
                    acc += jac[a * p + t] * jac[b * p + t];
                g[a * k + b] = acc;
            }
        std::vector<double> y = r;
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            for (std::size_t row = col + 1; row < k; ++row)
                if (std::abs(g[row * k + col]) > std::abs(g[piv * k + col]))
                    piv = row;
            if (std::abs(g[piv * k + col]) < 1e-300)
                continue;
            if (piv != col) {
                for (std::size_t t = 0; t < k; ++t)
                    std::swap(g[col * k + t], g[piv * k + t]);
                std::swap(y[col], y[piv]);
            }
            for (std::size_t row = col + 1; row < k; ++row) {
                const double f = g[row * k + col] / g[col * k + col];
                for (std::size_t t = col; t < k; ++t)
                    g[row * k + t] -= f * g[col * k + t];
                y[row] -= f * y[col];
            }
        }
        for (std::size_t col = k; col-- > 0;) {
            if (std::abs(g[col * k + col]) < 1e-300) {
                y[col] = 0.0;
                continue;
            }
            double acc = y[col];
            for (std::size_t t = col + 1; t < k; ++t)
                acc -= g[col * k + t] * y[t];
            y[col] = acc / g[col * k + col];
        }
        for (std::size_t l = 0; l < d; ++l) {
            double re = 0.0;
            double im = 0.0;
            for (std::size_t a = 0; a < k; ++a) {
                re += jac[a * p + 2 * l] * y[a];
                im += jac[a * p + 2 * l + 1] * y[a];
            }
            c[l] -= Scalar(re, im);
        }
    }
    Vector out(m);
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t i = 0; i < m; ++i)
            out[i] += c[l] * iso.domain[l][i];
    normalize2(out);
    return out;
}

// Douglas-Rachford on pairs (v, u): the linear set {(v, map v) : v ∈ span}
// against the modulus constraints of the K1 sides.
SubspaceSearchResult projection_search(const Isometry& iso, KClass kv, KClass ku, double tol, std::uint64_t seed)
{
    const std::size_t d = iso.domain.size();
    const std::size_t m = iso.domain.front().size();
    const std::size_t n = iso.image.front().size();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    const Field field = iso.map.field();

    auto onto_graph = [&](const Vector& v, const Vector& u, Vector& pv, Vector& pu) {
        pv.assign(m, Scalar{});
        pu.assign(n, Scalar{});
        for (std::size_t l = 0; l < d; ++l) {
            const Scalar c = 0.5 * (inner(iso.domain[l], v) + inner(iso.image[l], u));
            for (std::size_t i = 0; i < m; ++i)
                pv[i] += c * iso.domain[l][i];
            for (std::size_t i = 0; i < n; ++i)
                pu[i] += c * iso.image[l][i];
        }
    };
    auto onto_moduli = [&](const Vector& v, const Vector& u, Vector& bv, Vector& bu) {
        bv = kv == KClass::K1 ? constant_modulus(v) : v;
        bu = ku == KClass::K1 ? constant_modulus(u) : u;
    };

    Vector pv, pu, bv, bu, rv, ru, gv, gu;
    for (int start = 0; start < kProjectionStarts + static_cast<int>(d); ++start) {
        Vector v;
        if (start < static_cast<int>(d)) {
            v = iso.domain[static_cast<std::size_t>(start)];
        } else {
            std::vector<Scalar> c(d);
            for (auto& z : c)
                z = field == Field::real ? Scalar(gauss(rng), 0.0) : Scalar(gauss(rng), gauss(rng));
            v.assign(m, Scalar{});
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t i = 0; i < m; ++i)
                    v[i] += c[l] * iso.domain[l][i];
        }
        normalize2(v);
        Vector u = iso.forward(v);
        for (int it = 0; it < kProjectionIters; ++it) {
            onto_moduli(v, u, bv, bu);
            onto_graph(bv, bu, pv, pu);
            Vector cand = pv;
            normalize2(cand);
            if (accept(iso, cand, kv, ku, tol))
                return {std::move(cand), false};
            if (accept(iso, cand, kv, ku, std::max(1e-4, tol))) {
                Vector polished = newton_polish(iso, cand, kv, ku);
                if (accept(iso, polished, kv, ku, tol))
                    return {std::move(polished), false};
            }
            // x <- x + P_L(2 P_B x - x) - P_B x
            rv = bv;
            ru = bu;
            for (std::size_t i = 0; i < m; ++i)
                rv[i] = 2.0 * bv[i] - v[i];
            for (std::size_t i = 0; i < n; ++i)
                ru[i] = 2.0 * bu[i] - u[i];
            onto_graph(rv, ru, gv, gu);
            for (std::size_t i = 0; i < m; ++i)
                v[i] += gv[i] - bv[i];
            for (std::size_t i = 0; i < n; ++i)
                u[i] += gu[i] - bu[i];
        }
    }
    return {std::nullopt, false};
}

} // namespace

Vector project(const std::vector<Vector>& basis, std::span<const Scalar> x)
{
    Vector out(x.size());
    for (const auto& b : basis) {
        const Scalar c = inner(b, x);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += c * b[i];
    }
    return out;
}

SubspaceSearchResult find_in_subspace(const std::vector<Vector>& basis, const Matrix& map, KClass v_class,
                                      KClass image_class, double tol, std::uint64_t seed)
{
    if (basis.empty())
        return {std::nullopt, true};

    Isometry iso{basis, {}, map};
    for (const auto& b : basis)
        iso.image.push_back(map.apply(b));

    if (basis.size() == 1 || (v_class == KClass::K0 && image_class == KClass::K0)) {
        Vector v = basis.front();
        normalize2(v);
        if (accept(iso, v, v_class, image_class, tol))
            return {std::move(v), true};
        return {std::nullopt, basis.size() == 1};
    }

    if (v_class == KClass::Kminus1)
        return coordinate_search(iso, false, v_class, image_class, tol);
    if (image_class == KClass::Kminus1)
        return coordinate_search(iso, true, v_class, image_class, tol);

    // at least one side is K1, the other K1 or K0
    if (map.is_real()) {
        const std::size_t m = map.cols();
        const std::size_t n = map.rows();
        const bool domain_ok = v_class == KClass::K1 && m <= kMaxSignEnumeration;
        const bool image_ok = image_class == KClass::K1 && n <= kMaxSignEnumeration;
        if (domain_ok && (!image_ok || m <= n))
            return sign_search(iso, false, v_class, image_class, tol);
        if (image_ok)
            return sign_search(iso, true, v_class, image_class, tol);
    }
    return projection_search(iso, v_class, image_class, tol, seed);
}

} // namespace normeq
