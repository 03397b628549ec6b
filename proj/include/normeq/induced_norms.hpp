#ifndef NORMEQ_INDUCED_NORMS_HPP
#define NORMEQ_INDUCED_NORMS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "normeq/matrix.hpp"
#include "normeq/svd.hpp"

namespace normeq {

enum class Certainty { exact_closed_form, exact_enumeration, lower_bound_estimate };

std::string_view to_string(Certainty c);

inline bool is_exact(Certainty c)
{
    return c != Certainty::lower_bound_estimate;
}

/// Value of ‖A‖_{p,q} (or a lower bound) together with a vector attaining it.
struct NormResult {
    double value = 0.0;
    Vector witness;  // ‖witness‖_p = 1
    Certainty certainty = Certainty::lower_bound_estimate;
};

/// ‖Ax‖_q / ‖x‖_p, 0 for x = 0.
double norm_ratio(const Matrix& a, std::span<const Scalar> x, ExtIndex p, ExtIndex q);

/// Closed forms: p = 1 (max column ℓq), q = ∞ (max row ℓ_{p*}), p = q = 2
/// (largest singular value), and single-row / single-column matrices.
std::optional<NormResult> norm_closed_form(const Matrix& a, ExtIndex p, ExtIndex q);

/// Largest singular value with its right singular vector as witness.
NormResult spectral_norm(const Matrix& a);

/// ‖A‖_{∞,1}. Real: exact over {±1}^m (m ≤ 24). Complex: phase grid plus
/// local ascent (m ≤ 6), certainty lower-bound-estimate.
/// Throws DimensionTooLarge beyond those bounds.
NormResult norm_infty_one_exact(const Matrix& a);

/// Exact ‖A‖_{∞,q} for real matrices by vertex enumeration of the cube.
/// Throws DimensionTooLarge if m > 24, PreconditionError for complex input.
NormResult norm_infty_q_real(const Matrix& a, ExtIndex q);

struct EstimatorConfig {
    int random_starts = 32;
    int max_iter = 200;
    double tol = 1e-10;
    std::uint64_t seed = 0;
};

/// Duality-map ascent: y = Ax, z = A*·Φ_q(y), x = argmax_{‖x‖_p=1} Re⟨z,x⟩.
/// Starts: random, all coordinate vectors and the constant vector. Returns the
/// closed form when one exists.
NormResult norm_estimate(const Matrix& a, ExtIndex p, ExtIndex q, const EstimatorConfig& cfg = {});

/// Independent sampling oracle: grid + random points of the unit sphere, best
/// ten polished by ascent iterations. Deterministic in (a, p, q, budget, seed).
NormResult norm_bruteforce(const Matrix& a, ExtIndex p, ExtIndex q, std::size_t budget = 20000,
                           std::uint64_t seed = 0);

/// Preferred evaluation path: closed form, then exact enumeration (real field
/// with p = ∞ or q = 1), then the estimator (with phase-grid starts for small
/// complex problems).
NormResult induced_norm(const Matrix& a, ExtIndex p, ExtIndex q, const EstimatorConfig& cfg = {});

/// Up to `count` pairwise non-proportional maximizer candidates whose ratio is
/// within 1e-6 of the best found.
std::vector<Vector> maximizer_set_probe(const Matrix& a, ExtIndex p, ExtIndex q, std::size_t count,
                                        std::uint64_t seed = 0);

/// Primal step of the ascent: the x with ‖x‖_p = 1 maximizing Re⟨z,x⟩.
/// p = 1 picks the lowest-index coordinate of maximal modulus; p = ∞ gives
/// the phase vector.
Vector dual_direction(std::span<const Scalar> z, ExtIndex p);

/// Single ascent run from `start`; returns the best iterate.
NormResult ascend(const Matrix& a, ExtIndex p, ExtIndex q, Vector start, int max_iter, double tol);

} // namespace normeq

#endif // NORMEQ_INDUCED_NORMS_HPP
