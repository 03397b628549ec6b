#ifndef NORMEQ_EQUALITY_CLASSES_HPP
#define NORMEQ_EQUALITY_CLASSES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normeq/bounds.hpp"
#include "normeq/svd.hpp"

namespace normeq {

/// The four equality classes, labeled by the extremal index pair (r,s):
///   E_1inf:   r < p, s > q        E_11:   r < p, s < q
///   E_infinf: r > p, s > q        E_inf1: r > p, s < q
enum class ClassId { E_1inf, E_11, E_infinf, E_inf1 };

std::string_view to_string(ClassId id);
/// Accepts "E_1inf", "E_11", "E_infinf", "E_inf1".
std::optional<ClassId> parse_class_id(std::string_view text);
/// Extremal pair (r,s) of a class.
std::pair<ExtIndex, ExtIndex> extremal_pair(ClassId id);
/// Class whose open quadrant contains (r,s) relative to (p,q); nullopt on
/// the boundary r = p or s = q.
std::optional<ClassId> class_for_quadrant(ExtIndex p, ExtIndex q, ExtIndex r, ExtIndex s);
/// False when p or q sits at the end of [1,∞] that empties the quadrant.
bool quadrant_nonempty(ClassId id, ExtIndex p, ExtIndex q);

enum class Membership { yes, no, undetermined };
std::string_view to_string(Membership m);

enum class VerdictCertainty { exact, estimate_backed };
std::string_view to_string(VerdictCertainty c);

struct Condition {
    std::string name;
    bool satisfied = false;
    std::vector<std::pair<std::string, double>> measured;
};

struct Certificate {
    std::optional<Vector> maximizer;
    std::optional<SvdFactors> svd;
    std::optional<Vector> eigenvector;
    std::optional<Matrix> D;
    std::optional<Matrix> V;
};

struct ClassVerdict {
    ClassId id = ClassId::E_1inf;
    Membership member = Membership::undetermined;
    VerdictCertainty certainty = VerdictCertainty::exact;
    std::vector<Condition> conditions;
    Certificate certificate;
    std::string note;
};

struct RhoSigmaTau {
    double rho = 0.0;        // largest entry modulus, ‖A‖_{1,∞}
    double sigma_col = 0.0;  // largest column ℓ1 norm, ‖A‖_{1,1}
    double sigma_row = 0.0;  // largest row ℓ1 norm, ‖A‖_{∞,∞}
    std::optional<double> tau;  // common modulus of (Av)_i when v is given and Av ∈ K1
};

RhoSigmaTau rho_sigma_tau(const Matrix& a, const Vector* v = nullptr, double tol = kDefaultTol);

/// Outcome of one of the sufficient conditions. `lhs <= rhs` is the tested
/// inequality; `holds` implies membership.
struct SufficientResult {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string diagnostic;
    /// Literal evaluation of the printed form where it differs from the
    /// form used for the decision (NaN when not applicable).
    double printed_lhs = 0.0;
    bool printed_holds = false;
    /// sufficient_5prime: the two routes disagree.
    bool discrepancy = false;
};

ClassVerdict check_E1inf(const Matrix& a, ExtIndex p, ExtIndex q, const CheckOptions& opts = {});
ClassVerdict check_E11(const Matrix& a, ExtIndex p, ExtIndex q, const CheckOptions& opts = {});
/// Evaluated as check_E11(A*, q*, p*) with row-form condition names.
ClassVerdict check_Einfinf(const Matrix& a, ExtIndex p, ExtIndex q, const CheckOptions& opts = {});
ClassVerdict check_Einf1(const Matrix& a, ExtIndex p, ExtIndex q, const CheckOptions& opts = {});
ClassVerdict check_class(const Matrix& a, ClassId id, ExtIndex p, ExtIndex q, const CheckOptions& opts = {});

/// m^{1-1/p} n^{1/q} ‖C‖_{1,∞} ≤ ρ with C = A minus its ρ-entries, p ≤ q.
SufficientResult sufficient_3prime(const Matrix& a, ExtIndex p, ExtIndex q, double tol = kDefaultTol);
/// Column condition for E_11(p,q), p ≤ 2, q ≤ p. See README for the form used.
SufficientResult sufficient_4prime(const Matrix& a, ExtIndex p, ExtIndex q, double tol = kDefaultTol);
/// Row condition for E_infinf(p,q), q ≥ 2, p ≥ q; sufficient_4prime(A*, q*, p*)
/// cross-checked against the printed row inequality.
SufficientResult sufficient_5prime(const Matrix& a, ExtIndex p, ExtIndex q, double tol = kDefaultTol);

/// Decides ‖A‖_{r,s} = m^{[1/2-1/r]_+} n^{[1/s-1/2]_+} ‖A‖_{2,2} by searching the
/// top singular subspaces for u1 ∈ K_{sgn(2-s)} and v1 ∈ K_{-sgn(2-r)}.
ClassVerdict check_theorem2(const Matrix& a, ExtIndex r, ExtIndex s, const CheckOptions& opts = {});

/// True iff A*A v ∥ v within tol. Throws PreconditionError when v or Av has
/// nonzero entries of unequal modulus, or p = 1 with v ∉ K1, or p = ∞ with v ∉ K-1.
bool lemma31_eigencheck(const Matrix& a, const Vector& v, ExtIndex p, ExtIndex q, double tol = kDefaultTol);

struct DavResult {
    std::optional<std::pair<Matrix, Matrix>> factors;  // (D, V)
    double tau = 0.0;
    std::vector<Scalar> row_sums;
    std::vector<Scalar> col_sums;
    std::string failure;
};

/// V = diag(v), D = diag(conj(Av)/τ); succeeds when all row sums of DAV equal τ
/// and all column sums equal nτ/m.
DavResult dav_normal_form(const Matrix& a, const Vector& v, double tol = kDefaultTol);

} // namespace normeq

#endif // NORMEQ_EQUALITY_CLASSES_HPP
