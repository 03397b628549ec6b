#ifndef NORMEQ_SVD_HPP
#define NORMEQ_SVD_HPP

#include <vector>

#include "normeq/matrix.hpp"

namespace normeq {

/// A = U Σ V* with U (n×n) and V (m×m) unitary. `singular` holds the
/// min(n,m) diagonal entries of Σ in nonincreasing order.
struct SvdFactors {
    Matrix U;
    std::vector<double> singular;
    Matrix V;

    /// Σ as an n×m matrix.
    Matrix sigma() const;
    /// U Σ V*
    Matrix reconstruct() const;
};

/// One-sided (Hestenes) Jacobi SVD. Works in complex arithmetic; real input
/// produces real factors. Throws NumericalFailure after 30 sweeps.
SvdFactors svd(const Matrix& a);

/// Eigen-decomposition of the Hermitian matrix A*A obtained from the SVD:
/// columns of `vectors` (m×m) are orthonormal eigenvectors, `values` the
/// matching eigenvalues in nonincreasing order.
struct GramEigen {
    std::vector<double> values;
    Matrix vectors;
};

GramEigen gram_eigen(const Matrix& a);

/// Groups consecutive eigenvalues that agree within tol·max(values[0], tiny).
/// Returns half-open index ranges [first, last).
std::vector<std::pair<std::size_t, std::size_t>>
cluster_eigenvalues(const std::vector<double>& values, double tol);

/// Extends `columns` (orthonormal, each of length dim) to an orthonormal basis
/// of the whole space by Gram-Schmidt against the coordinate vectors.
std::vector<Vector> complete_orthonormal_basis(std::vector<Vector> columns, std::size_t dim);

} // namespace normeq

#endif // NORMEQ_SVD_HPP
