#ifndef NORMEQ_SUBSPACE_SEARCH_HPP
#define NORMEQ_SUBSPACE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "normeq/matrix.hpp"

namespace normeq {

struct SubspaceSearchResult {
    std::optional<Vector> v;   // unit ℓ2, in the subspace
    bool exhaustive = false;   // a negative answer is a proof
};

/// Looks for v in span(basis) with v ∈ `v_class` and map·v ∈ `image_class`.
/// `basis` must be orthonormal and `map` an isometry on its span (A/σ on a
/// singular subspace, A/√λ on an eigenspace of A*A). Coordinate classes and
/// real sign patterns are searched exhaustively; complex constant-modulus
/// targets fall back to alternating projections.
SubspaceSearchResult find_in_subspace(const std::vector<Vector>& basis, const Matrix& map, KClass v_class,
                                      KClass image_class, double tol, std::uint64_t seed = 0);

/// Orthogonal projection of x onto span(basis).
Vector project(const std::vector<Vector>& basis, std::span<const Scalar> x);

} // namespace normeq

#endif // NORMEQ_SUBSPACE_SEARCH_HPP
