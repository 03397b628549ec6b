#include "normeq/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace normeq {

Matrix unitary_with_first_column(std::span<const Scalar> c, Field field)
{
    const std::size_t k = c.size();
    if (k == 0)
        throw PreconditionError("unitary completion needs a nonempty vector");
    const double nrm = vector_norm(c, ExtIndex::two());
    if (nrm == 0.0)
        throw PreconditionError("unitary completion of the zero vector");
    if (std::abs(nrm - 1.0) > 1e-12)
        throw PreconditionError("unitary completion needs a unit vector");
    for (const auto& z : c)
        if (field == Field::real && z.imag() != 0.0)
            throw PreconditionError("complex vector under the real field");

    // U = α (I - 2ww*/‖w‖²), w = e1 - conj(α) c, α = phase(c_1): U e1 = c
    const Scalar alpha = phase(c[0]);
    Vector w(k);
    for (std::size_t i = 0; i < k; ++i)
        w[i] = (i == 0 ? 1.0 : 0.0) - std::conj(alpha) * c[i];
    const double ww = std::real(inner(w, w));
    Matrix u(k, k, Field::complex);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Scalar h = i == j ? 1.0 : 0.0;
            if (ww > 0.0)
                h -= 2.0 * w[i] * std::conj(w[j]) / ww;
            u(i, j) = alpha * h;
        }
    for (std::size_t i = 0; i < k; ++i)
        u(i, 0) = c[i];
    if (field == Field::real)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                u(i, j) = u(i, j).real();
    return u.with_field(field);
}

Vector k_class_representative(KClass k, std::size_t dim, Field field, std::uint64_t seed)
{
    Vector v(dim);
    if (k == KClass::Kminus1) {
        v[0] = 1.0;
        return v;
    }
    std::mt19937_64 rng(seed);
    if (k == KClass::K1) {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        std::bernoulli_distribution coin;
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        for (auto& z : v)
            z = field == Field::real ? Scalar(coin(rng) ? scale : -scale, 0.0) : std::polar(scale, angle(rng));
        return v;
    }
    std::normal_distribution<double> gauss;
    for (auto& z : v)
        z = field == Field::real ? Scalar(gauss(rng), 0.0) : Scalar(gauss(rng), gauss(rng));
    const double nrm = vector_norm(v, ExtIndex::two());
    for (auto& z : v)
        z /= nrm;
    return v;
}

Matrix gen_theorem2(std::size_t m, std::size_t n, ExtIndex r, ExtIndex s, const std::vector<double>& sigma,
                    std::uint64_t seed, Field field)
{
    if (m == 0 || n == 0)
        throw PreconditionError("dimensions must be positive");
    if (sigma.empty() || sigma.size() > std::min(m, n))
        throw PreconditionError("sigma must list between 1 and min(m,n) values");
    for (double x : sigma)
        if (!(x >= 0.0) || x > sigma.front())
            throw PreconditionError("sigma must be nonnegative with the first value maximal");

    const KClass u_class = k_class_from_sign(sign_of_difference(ExtIndex::two(), s));
    const KClass v_class = k_class_from_sign(-sign_of_difference(ExtIndex::two(), r));
    const Vector u1 = k_class_representative(u_class, n, field, seed);
    const Vector v1 = k_class_representative(v_class, m, field, seed ^ 0x9e3779b97f4a7c15ULL);
    const Matrix u = unitary_with_first_column(u1, field);
    const Matrix v = unitary_with_first_column(v1, field);

    Matrix a(n, m, field);
    for (std::size_t k = 0; k < sigma.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a(i, j) += sigma[k] * u(i, k) * std::conj(v(j, k));
    return a;
}

Matrix gen_hadamard(std::size_t k)
{
    if (k == 0 || (k & (k - 1)) != 0)
        throw PreconditionError("Hadamard order must be a power of two");
    Matrix h(k, k);
    h(0, 0) = 1.0;
    for (std::size_t t = 1; t < k; t *= 2)
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                h(i, j + t) = h(i, j);
                h(i + t, j) = h(i, j);
                h(i + t, j + t) = -h(i, j);
            }
    return h;
}

Matrix gen_dft(std::size_t k)
{
    if (k == 0)
        throw PreconditionError("DFT order must be positive");
    Matrix f(k, k, Field::complex);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
            const std::size_t e = (j * l) % k;
            // exact values on the axes keep small orders free of rounding noise
            if (4 * e % k == 0) {
                static const Scalar quarter[] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
                f(j, l) = quarter[4 * e / k];
            } else {
                f(j, l) = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(k));
            }
        }
    return f;
}

Matrix gen_tensor_product(std::span<const Scalar> c, std::span<const Scalar> b, Field field)
{
    if (c.empty() || b.empty())
        throw PreconditionError("tensor factors must be nonempty");
    Matrix a(c.size(), b.size(), Field::complex);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            a(i, j) = c[i] * b[j];
    return a.with_field(field);
}

Matrix gen_single_entry(std::size_t m, std::size_t n, std::size_t i, std::size_t j, double rho)
{
    if (m == 0 || n == 0)
        throw PreconditionError("dimensions must be positive");
    if (i >= n || j >= m)
        throw PreconditionError("entry index out of range");
    if (!(rho > 0.0))
        throw PreconditionError("rho must be positive");
    Matrix a(n, m);
    a(i, j) = rho;
    return a;
}

} // namespace normeq
