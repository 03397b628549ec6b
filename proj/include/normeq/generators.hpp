#ifndef NORMEQ_GENERATORS_HPP
#define NORMEQ_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "normeq/matrix.hpp"

namespace normeq {

/// Unitary matrix whose first column is exactly c (Householder completion).
/// c must have unit ℓ2 norm within 1e-12.
Matrix unitary_with_first_column(std::span<const Scalar> c, Field field);

/// Unit ℓ2 representative of a K-class of length `dim`: phases drawn from the
/// seed for K1, e1 for K-1, a random direction for K0.
Vector k_class_representative(KClass k, std::size_t dim, Field field, std::uint64_t seed);

/// U Σ V* with u1 ∈ K_{sgn(2-s)}, v1 ∈ K_{-sgn(2-r)}. A has n rows, m columns;
/// sigma lists the first min(m,n) singular values (missing ones are zero).
Matrix gen_theorem2(std::size_t m, std::size_t n, ExtIndex r, ExtIndex s, const std::vector<double>& sigma,
                    std::uint64_t seed, Field field = Field::real);

/// Sylvester construction; k must be a power of two.
Matrix gen_hadamard(std::size_t k);

/// Entries ω^{jl}, ω = exp(-2πi/k).
Matrix gen_dft(std::size_t k);

/// A_ij = c_i b_j; c has n entries, b has m.
Matrix gen_tensor_product(std::span<const Scalar> c, std::span<const Scalar> b, Field field);

/// Zero n×m matrix with A_ij = rho (0-based indices).
Matrix gen_single_entry(std::size_t m, std::size_t n, std::size_t i, std::size_t j, double rho);

} // namespace normeq

#endif // NORMEQ_GENERATORS_HPP
