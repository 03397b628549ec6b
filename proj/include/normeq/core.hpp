#ifndef NORMEQ_CORE_HPP
#define NORMEQ_CORE_HPP

#include <complex>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace normeq {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

enum class Field { real, complex };

std::string_view to_string(Field f);

/// Default relative tolerance for K-class and norm-equality predicates.
inline constexpr double kDefaultTol = 1e-8;

/// Raised when a documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact algorithm refuses an input that is too large.
class DimensionTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Raised when an iterative factorization fails to converge.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

////////////////////////////////////////////////////////////////////////
//
// ExtIndex
//
////////////////////////////////////////////////////////////////////////

/// A Hölder exponent in [1, ∞]. The values 1, 2 and ∞ are stored as exact
/// tags so that sign comparisons between indices are exact there.
class ExtIndex {
public:
    enum class Kind { one, two, infinity, finite };

    constexpr ExtIndex() = default;
    /// Throws PreconditionError if value < 1 or NaN. +inf maps to the ∞ tag.
    explicit ExtIndex(double value);

    static constexpr ExtIndex one() { return ExtIndex(Kind::one, 1.0); }
    static constexpr ExtIndex two() { return ExtIndex(Kind::two, 2.0); }
    static constexpr ExtIndex infinity() { return ExtIndex(Kind::infinity, 0.0); }

    /// Parses "1", "1.5", "inf", "Infinity" (case-insensitive).
    static ExtIndex parse(std::string_view text);

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_one() const { return kind_ == Kind::one; }
    constexpr bool is_two() const { return kind_ == Kind::two; }
    constexpr bool is_infinite() const { return kind_ == Kind::infinity; }

    /// The exponent as a double; +inf for ∞.
    double value() const;
    /// 1/p with 1/∞ = 0.
    double reciprocal() const;

    std::string str() const;

    friend std::partial_ordering operator<=>(const ExtIndex& a, const ExtIndex& b);
    friend bool operator==(const ExtIndex& a, const ExtIndex& b);

private:
    constexpr ExtIndex(Kind k, double v) : kind_(k), value_(v) {}

    Kind kind_ = Kind::one;
    double value_ = 1.0;
};

/// p* = p/(p-1); 1 <-> ∞, 2 <-> 2.
ExtIndex conjugate(ExtIndex p);

/// sgn(a - b) in {-1, 0, +1}, exact on the tagged indices.
int sign_of_difference(ExtIndex a, ExtIndex b);

/// [z]_+
inline double positive_part(double z) { return z > 0.0 ? z : 0.0; }

////////////////////////////////////////////////////////////////////////
//
// vector norms and K-classes
//
////////////////////////////////////////////////////////////////////////

/// (Σ|x_i|^p)^{1/p}, max|x_i| for p = ∞. Scaled to avoid overflow.
double vector_norm(std::span<const Scalar> x, ExtIndex p);

/// m^{[(1/r) - (1/p)]_+}: the sharp constant in ‖x‖_r ≤ c·‖x‖_p on m-vectors.
double prop1_factor(ExtIndex r, ExtIndex p, std::size_t m);

enum class KClass { K1, Kminus1, K0 };

std::string_view to_string(KClass k);

/// K_{sgn}: +1 -> K1, -1 -> Kminus1, 0 -> K0.
KClass k_class_from_sign(int sgn);

/// Membership with relative tolerance. The zero vector belongs to every class.
///   K1:      max|x_i| - min|x_i| <= tol * max|x_i|
///   Kminus1: at most one |x_i| > tol * max|x_i|
bool k_class_test(std::span<const Scalar> x, KClass k, double tol = kDefaultTol);

/// The equality set of ‖x‖_r ≤ prop1_factor(r,p,m)‖x‖_p, i.e. K_{sgn(p-r)}.
KClass prop1_equality_class(ExtIndex p, ExtIndex r);

/// z/|z|, with phase(0) = 1.
Scalar phase(Scalar z);

} // namespace normeq

#endif // NORMEQ_CORE_HPP
