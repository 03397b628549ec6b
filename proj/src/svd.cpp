#include "normeq/svd.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

namespace normeq {

namespace {

constexpr int kMaxSweeps = 30;
constexpr double kAngleTol = 4.0 * DBL_EPSILON;
// columns below this fraction of ‖A‖_F are treated as numerically zero
constexpr double kNegligible = 1e-13;

double norm2_squared(const Vector& v)
{
    double acc = 0.0;
    for (const auto& z : v)
        acc += std::norm(z);
    return acc;
}

} // namespace

Matrix SvdFactors::sigma() const
{
    Matrix s(U.rows(), V.rows(), Field::real);
    for (std::size_t k = 0; k < singular.size(); ++k)
        s(k, k) = singular[k];
    return s;
}

Matrix SvdFactors::reconstruct() const
{
    return U * sigma() * V.adjoint();
}

std::vector<Vector> complete_orthonormal_basis(std::vector<Vector> columns, std::size_t dim)
{
    for (std::size_t e = 0; e < dim && columns.size() < dim; ++e) {
        Vector cand(dim);
        cand[e] = 1.0;
        // two passes of classical Gram-Schmidt
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : columns) {
                const Scalar proj = inner(q, cand);
                for (std::size_t i = 0; i < dim; ++i)
                    cand[i] -= proj * q[i];
            }
        const double nrm = std::sqrt(norm2_squared(cand));
        if (nrm < 1e-8)
            continue;
        for (auto& z : cand)
            z /= nrm;
        columns.push_back(std::move(cand));
    }
    return columns;
}

SvdFactors svd(const Matrix& a)
{
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    const Field field = a.field();

    std::vector<Vector> w(m);
    std::vector<Vector> v(m, Vector(m));
    for (std::size_t j = 0; j < m; ++j) {
        w[j] = a.column(j);
        v[j][j] = 1.0;
    }

    const double fro = a.frobenius();
    const double floor2 = (kNegligible * fro) * (kNegligible * fro);

    bool converged = (fro == 0.0);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                const double alpha = norm2_squared(w[i]);
                const double beta = norm2_squared(w[j]);
                if (std::min(alpha, beta) <= floor2)
                    continue;
                const Scalar gamma = inner(w[i], w[j]);
                const double g = std::abs(gamma);
                if (g <= kAngleTol * std::sqrt(alpha * beta))
                    continue;
                rotated = true;

                const Scalar unphase = std::conj(phase(gamma));
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                auto rotate = [&](Vector& x, Vector& y) {
                    for (std::size_t k = 0; k < x.size(); ++k) {
                        const Scalar yk = y[k] * unphase;
                        const Scalar xk = x[k];
                        x[k] = c * xk - s * yk;
                        y[k] = s * xk + c * yk;
                    }
                };
                rotate(w[i], w[j]);
                rotate(v[i], v[j]);
            }
        }
        converged = !rotated;
    }
    if (!converged)
        throw NumericalFailure("Jacobi SVD did not converge within 30 sweeps");

    std::vector<double> norms(m);
    for (std::size_t j = 0; j < m; ++j)
        norms[j] = std::sqrt(norm2_squared(w[j]));
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    const std::size_t k = std::min(n, m);
    SvdFactors out;
    out.singular.resize(k);
    std::vector<Vector> ucols;
    for (std::size_t idx = 0; idx < k; ++idx) {
        const std::size_t j = order[idx];
        out.singular[idx] = norms[j];
        if (norms[j] > kNegligible * fro && ucols.size() == idx) {
            Vector u = w[j];
            for (auto& z : u)
                z /= norms[j];
            ucols.push_back(std::move(u));
        }
    }
    ucols = complete_orthonormal_basis(std::move(ucols), n);

    std::vector<Vector> vcols(m);
    for (std::size_t idx = 0; idx < m; ++idx)
        vcols[idx] = v[order[idx]];

    out.U = Matrix::from_columns(ucols, field);
    out.V = Matrix::from_columns(vcols, field);
    return out;
}

GramEigen gram_eigen(const Matrix& a)
{
    SvdFactors f = svd(a);
    GramEigen out;
    out.values.assign(a.cols(), 0.0);
    for (std::size_t k = 0; k < f.singular.size(); ++k)
        out.values[k] = f.singular[k] * f.singular[k];
    out.vectors = std::move(f.V);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
cluster_eigenvalues(const std::vector<double>& values, double tol)
{
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    if (values.empty())
        return groups;
    const double scale = std::max(values.front(), DBL_MIN);
    std::size_t first = 0;
    for (std::size_t k = 1; k <= values.size(); ++k) {
        if (k == values.size() || values[first] - values[k] > tol * scale) {
            groups.emplace_back(first, k);
            first = k;
        }
    }
    return groups;
}

} // namespace normeq
