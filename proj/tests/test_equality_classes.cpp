#include <doctest.h>

#include <cmath>

#include "normeq/equality_classes.hpp"
#include "normeq/generators.hpp"
#include "support/oracle.hpp"

using namespace normeq;

namespace {

const ExtIndex I1 = ExtIndex::one();
const ExtIndex I2 = ExtIndex::two();
const ExtIndex Inf = ExtIndex::infinity();
const Scalar J{0, 1};

Matrix example(Field f)
{
    return Matrix({{1, 1}, {-1, 1}}).with_field(f);
}

oracle::Dense dense(const Matrix& a)
{
    oracle::Dense d;
    d.n = a.rows();
    d.m = a.cols();
    d.real = a.is_real();
    d.a.assign(a.data().begin(), a.data().end());
    return d;
}

} // namespace

TEST_CASE("class ids and quadrants")
{
    CHECK(parse_class_id("E_inf1") == ClassId::E_inf1);
    CHECK_FALSE(parse_class_id("E_12"));
    CHECK(class_for_quadrant(I2, I2, I1, Inf) == ClassId::E_1inf);
    CHECK(class_for_quadrant(I2, I2, I1, I1) == ClassId::E_11);
    CHECK(class_for_quadrant(I2, I2, Inf, Inf) == ClassId::E_infinf);
    CHECK(class_for_quadrant(I2, I2, Inf, I1) == ClassId::E_inf1);
    CHECK_FALSE(class_for_quadrant(I2, I2, I2, I1));
    CHECK(extremal_pair(ClassId::E_inf1) == std::pair{Inf, I1});
    CHECK_FALSE(quadrant_nonempty(ClassId::E_11, I1, I2));
    CHECK(quadrant_nonempty(ClassId::E_11, I2, I2));
}

TEST_CASE("E_1inf")
{
    CHECK(check_E1inf(Matrix({{3, 0}, {0, 1}}), I2, I2).member == Membership::yes);
    const ClassVerdict shared = check_E1inf(Matrix({{3, 1}, {0, 1}}), I2, I2);
    CHECK(shared.member == Membership::no);
    CHECK_FALSE(shared.conditions.front().satisfied);
    CHECK(check_E1inf(gen_single_entry(2, 2, 0, 1, 5.0), ExtIndex(3.0), I2).member == Membership::yes);
    CHECK(check_E1inf(Matrix({{3, 0}, {0, 1}}), ExtIndex(3.0), I2).member == Membership::no);
    // largest entry isolated but the rest too heavy at (1.5, 3)
    const Matrix heavy({{1, 0, 0}, {0, 0.9, 0.9}, {0, 0.9, -0.9}});
    CHECK(check_E1inf(heavy, ExtIndex(1.5), ExtIndex(3.0)).member == Membership::no);
    // empty quadrant
    const ClassVerdict vac = check_E1inf(Matrix({{1, 2}, {3, 4}}), I1, I2);
    CHECK(vac.member == Membership::yes);
    CHECK_FALSE(vac.note.empty());
}

TEST_CASE("sufficient rho condition")
{
    const Matrix a({{3, 0}, {0, 1}});
    CHECK(sufficient_3prime(a, I1, Inf).holds);
    const SufficientResult r = sufficient_3prime(a, I2, I2);
    CHECK(r.holds);
    CHECK(r.lhs == doctest::Approx(2.0));
    CHECK_FALSE(sufficient_3prime(Matrix({{3, 0}, {0, 2.9}}), I2, I2).holds);
    const SufficientResult bad = sufficient_3prime(Matrix({{3, 1}, {0, 1}}), I2, I2);
    CHECK_FALSE(bad.holds);
    CHECK_FALSE(bad.diagnostic.empty());
}

TEST_CASE("E_11")
{
    CHECK(check_E11(gen_hadamard(2), I2, I2).member == Membership::yes);
    CHECK(check_E11(Matrix::identity(2), I2, I2).member == Membership::no);
    const Matrix col({{2}, {2}, {2}, {2}});
    CHECK(check_E11(col, ExtIndex(3.0), I2).member == Membership::yes);
    CHECK(check_E11(Matrix({{1, 1}, {1, 0}}), ExtIndex(3.0), I2).member == Membership::no);
    const ClassVerdict v = check_E11(Matrix({{1, 0.01}, {1, -0.01}}), ExtIndex(1.5), ExtIndex(1.2));
    CHECK(v.member == Membership::yes);
    CHECK(v.certainty == VerdictCertainty::exact);
}

TEST_CASE("sufficient column condition")
{
    CHECK(sufficient_4prime(gen_hadamard(2), ExtIndex(1.5), ExtIndex(1.2)).holds);
    const Matrix padded({{1, 1, 0}, {1, -1, 0}});
    CHECK(sufficient_4prime(padded, ExtIndex(1.01), ExtIndex(1.01)).holds);
    // p = 2, ‖C‖_{1,1}/σ = 0.9, m = n = 2
    const Matrix heavy({{1, 0.9}, {1, -0.9}});
    const SufficientResult r = sufficient_4prime(heavy, I2, I2);
    CHECK_FALSE(r.holds);
    CHECK(r.lhs > 1.0);
    CHECK_FALSE(sufficient_4prime(heavy, ExtIndex(3.0), I2).holds);
    CHECK_FALSE(sufficient_4prime(Matrix::identity(2), ExtIndex(1.5), ExtIndex(1.2)).holds);
}

TEST_CASE("E_infinf")
{
    CHECK(check_Einfinf(gen_hadamard(2), I2, I2).member == Membership::yes);
    CHECK(check_Einfinf(Matrix({{1, 1, 1}}), I2, ExtIndex(1.5)).member == Membership::yes);
    CHECK(check_Einfinf(Matrix({{2, 0}, {0, 1}}), I2, I2).member == Membership::no);
}

TEST_CASE("sufficient row condition")
{
    const Matrix padded({{1, 1}, {1, -1}, {0, 0}});
    CHECK(sufficient_5prime(padded, ExtIndex(100.0), ExtIndex(100.0)).holds);
    CHECK_FALSE(sufficient_5prime(Matrix({{1, 1}, {0.9, -0.9}}), I2, I2).holds);
    CHECK_FALSE(sufficient_5prime(gen_hadamard(2), ExtIndex(1.5), I2).holds);
}

TEST_CASE("E_inf1")
{
    const ClassVerdict c = check_Einf1(example(Field::complex), I2, I2);
    CHECK(c.member == Membership::yes);
    REQUIRE(c.certificate.eigenvector);
    const Vector& v = *c.certificate.eigenvector;
    // (1, i) or its conjugate
    CHECK(std::min(std::abs(v[1] / v[0] - J), std::abs(v[1] / v[0] + J)) < 1e-9);
    CHECK(c.certificate.D);

    CHECK(check_Einf1(example(Field::real), I2, I2).member == Membership::no);
    const Matrix ones({{1, 1}, {1, 1}});
    for (double p : {1.0, 1.5, 2.0, 7.0})
        for (double q : {1.5, 2.0, 5.0, double(INFINITY)})
            CHECK(check_Einf1(ones, ExtIndex(p), ExtIndex(q)).member == Membership::yes);
    CHECK(check_Einf1(Matrix({{2, 1}, {1, 3}}), ExtIndex(1.5), ExtIndex(3.0)).member == Membership::no);
    CHECK_THROWS_AS(check_Einf1(Matrix(2, 25, std::vector<Scalar>(50, 1.0), Field::real), I2, I2), DimensionTooLarge);
}

TEST_CASE("E_inf1 verdict agrees with the reference oracle")
{
    const Matrix t = gen_tensor_product(Vector{1.0, J}, Vector{1.0, -1.0}, Field::complex);
    const ClassVerdict v = check_Einf1(t, ExtIndex(1.5), ExtIndex(3.0));
    CHECK(v.member == Membership::yes);
    // equality at (r,s) = (∞,1): ‖A‖_{∞,1} = m^{1/p} n^{1-1/q} ‖A‖_{p,q}
    const double lhs = oracle::norm(dense(t), INFINITY, 1.0);
    const double pq = oracle::norm(dense(t), 1.5, 3.0);
    CHECK(lhs == doctest::Approx(std::pow(2.0, 1 / 1.5) * std::pow(2.0, 1 - 1 / 3.0) * pq).epsilon(1e-6));
}

TEST_CASE("top singular vector predicate")
{
    CHECK(check_theorem2(gen_hadamard(2), I1, I1).member == Membership::yes);
    const Matrix d({{2, 0}, {0, 1}});
    const ClassVerdict yes = check_theorem2(d, I1, Inf);
    CHECK(yes.member == Membership::yes);
    REQUIRE(yes.certificate.svd);
    CHECK(max_abs_diff(yes.certificate.svd->reconstruct(), d) < 1e-12);
    CHECK(check_theorem2(d, I1, I1).member == Membership::no);
    CHECK(check_theorem2(Matrix(2, 2), I1, I1).member == Membership::yes);
}

TEST_CASE("singular certificate for a degenerate top subspace")
{
    const Matrix a = gen_theorem2(3, 3, Inf, I1, {2, 2, 2}, 3, Field::complex);
    const ClassVerdict v = check_theorem2(a, Inf, I1);
    REQUIRE(v.member == Membership::yes);
    const SvdFactors& f = *v.certificate.svd;
    CHECK(max_abs_diff(f.reconstruct(), a) < 1e-9);
    CHECK(unitarity_defect(f.U) < 1e-9);
    CHECK(unitarity_defect(f.V) < 1e-9);
    CHECK(k_class_test(f.U.column(0), KClass::K1, 1e-8));
    CHECK(k_class_test(f.V.column(0), KClass::K1, 1e-8));
}

TEST_CASE("eigenvector lemma")
{
    CHECK(lemma31_eigencheck(example(Field::complex), Vector{1.0, J}, I2, I2));
    CHECK_THROWS_AS(lemma31_eigencheck(Matrix({{2, 0}, {0, 1}}), Vector{1.0, 0.0}, I1, I1), PreconditionError);
    CHECK(lemma31_eigencheck(gen_hadamard(2), Vector{1.0, 1.0}, I2, I2));
    CHECK_FALSE(lemma31_eigencheck(Matrix({{1, 1}, {0, 1}}), Vector{1.0, 0.0}, I2, I2));
}

TEST_CASE("DAV normal form")
{
    const DavResult ones = dav_normal_form(Matrix({{1, 1}, {1, 1}}), Vector{1.0, 1.0});
    REQUIRE(ones.factors);
    CHECK(ones.tau == doctest::Approx(2.0));
    CHECK(max_abs_diff(ones.factors->first, Matrix::identity(2)) < 1e-15);
    CHECK(max_abs_diff(ones.factors->second, Matrix::identity(2)) < 1e-15);

    const DavResult ex = dav_normal_form(example(Field::complex), Vector{1.0, J});
    REQUIRE(ex.factors);
    for (const auto& s : ex.row_sums)
        CHECK(std::abs(s - std::sqrt(2.0)) < 1e-12);
    for (const auto& s : ex.col_sums)
        CHECK(std::abs(s - std::sqrt(2.0)) < 1e-12);

    const DavResult none = dav_normal_form(Matrix({{2, 0}, {0, 1}}), Vector{1.0, 1.0});
    CHECK_FALSE(none.factors);
    CHECK_FALSE(none.failure.empty());
}

TEST_CASE("rho sigma tau")
{
    const Matrix a({{1, -2}, {3, 4}});
    const RhoSigmaTau r = rho_sigma_tau(a);
    CHECK(r.rho == 4.0);
    CHECK(r.sigma_col == 6.0);
    CHECK(r.sigma_row == 7.0);
    CHECK_FALSE(r.tau);
    const Vector v{1.0, J};
    CHECK(rho_sigma_tau(example(Field::complex), &v).tau.value() == doctest::Approx(std::sqrt(2.0)));
}
