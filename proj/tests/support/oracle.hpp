// Independent reference computations for tests. Nothing here calls the
// library's estimator, enumeration or SVD.
#ifndef NORMEQ_TESTS_ORACLE_HPP
#define NORMEQ_TESTS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;

struct Dense {
    std::size_t n = 0;  // rows
    std::size_t m = 0;  // cols
    bool real = true;
    std::vector<C> a;   // row-major
    C at(std::size_t i, std::size_t j) const { return a[i * m + j]; }
};

// p = +inf allowed
inline double lp(const Vec& x, double p)
{
    double out = 0.0;
    if (std::isinf(p)) {
        for (const auto& z : x)
            out = std::max(out, std::abs(z));
        return out;
    }
    for (const auto& z : x)
        out += std::pow(std::abs(z), p);
    return std::pow(out, 1.0 / p);
}

inline Vec mul(const Dense& d, const Vec& x)
{
    Vec y(d.n);
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = 0; j < d.m; ++j)
            y[i] += d.at(i, j) * x[j];
    return y;
}

inline double ratio(const Dense& d, const Vec& x, double p, double q)
{
    const double den = lp(x, p);
    return den > 0.0 ? lp(mul(d, x), q) / den : 0.0;
}

// Random multistart followed by compass search on the real parameters.
// A lower bound that is tight to roughly 1e-9 on the small matrices used in tests.
inline double norm(const Dense& d, double p, double q, std::uint64_t seed = 1, int starts = 60)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::uniform_int_distribution<std::size_t> pick(0, d.m - 1);
    const std::size_t dims = d.real ? d.m : 2 * d.m;
    auto build = [&](const std::vector<double>& t) {
        Vec x(d.m);
        for (std::size_t j = 0; j < d.m; ++j)
            x[j] = d.real ? C(t[j], 0.0) : C(t[2 * j], t[2 * j + 1]);
        return x;
    };
    double best = 0.0;
    for (int s = 0; s < starts; ++s) {
        std::vector<double> t(dims);
        const int kind = s % 4;
        for (auto& v : t)
            v = g(rng);
        if (kind == 1) {
            // sparse start
            std::fill(t.begin(), t.end(), 0.0);
            const std::size_t j = pick(rng);
            t[d.real ? j : 2 * j] = 1.0;
        } else if (kind == 2) {
            // constant-modulus start
            for (std::size_t j = 0; j < d.m; ++j) {
                if (d.real) {
                    t[j] = t[j] < 0 ? -1.0 : 1.0;
                } else {
                    const double ang = std::atan2(t[2 * j + 1], t[2 * j]);
                    t[2 * j] = std::cos(ang);
                    t[2 * j + 1] = std::sin(ang);
                }
            }
        }
        double f = ratio(d, build(t), p, q);
        double h = 0.5;
        while (h > 1e-11) {
            bool improved = false;
            for (std::size_t k = 0; k < dims; ++k)
                for (double sgn : {1.0, -1.0}) {
                    std::vector<double> u = t;
                    u[k] += sgn * h;
                    const double fu = ratio(d, build(u), p, q);
                    if (fu > f) {
                        f = fu;
                        t = std::move(u);
                        improved = true;
                    }
                }
            if (!improved)
                h *= 0.5;
        }
        best = std::max(best, f);
    }
    return best;
}

// Largest singular value via power iteration on A*A.
inline double spectral(const Dense& d, int iters = 2000)
{
    Vec x(d.m, C(1.0, 0.3));
    for (std::size_t j = 0; j < d.m; ++j)
        x[j] += C(0.1 * static_cast<double>(j), 0.0);
    double s = 0.0;
    for (int it = 0; it < iters; ++it) {
        Vec y = mul(d, x);
        Vec z(d.m);
        for (std::size_t j = 0; j < d.m; ++j)
            for (std::size_t i = 0; i < d.n; ++i)
                z[j] += std::conj(d.at(i, j)) * y[i];
        const double nz = lp(z, 2.0);
        if (nz == 0.0)
            return 0.0;
        for (auto& v : z)
            v /= nz;
        x = z;
        s = lp(mul(d, x), 2.0);
    }
    return s;
}

} // namespace oracle

#endif // NORMEQ_TESTS_ORACLE_HPP
