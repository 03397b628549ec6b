#include <doctest.h>

#include <random>

#include "normeq/matrix.hpp"
#include "normeq/svd.hpp"
#include "support/oracle.hpp"

using namespace normeq;

namespace {

Matrix random_matrix(std::size_t n, std::size_t m, Field f, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Matrix a(n, m, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a(i, j) = f == Field::real ? Scalar(g(rng), 0) : Scalar(g(rng), g(rng));
    return a;
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

TEST_CASE("matrix basics")
{
    const Matrix a({{1, 2}, {3, 4}, {5, 6}});
    CHECK(a.rows() == 3);
    CHECK(a.cols() == 2);
    CHECK(a.adjoint()(1, 2) == Scalar{6, 0});
    const Vector y = a.apply(Vector{{1, 0}, {-1, 0}});
    CHECK(y == Vector{{-1, 0}, {-1, 0}, {-1, 0}});
    CHECK(a.apply_adjoint(Vector{{1, 0}, {0, 0}, {0, 0}}) == Vector{{1, 0}, {2, 0}});
    CHECK(a.max_abs() == 6.0);
    CHECK_THROWS_AS(Matrix(2, 2, std::vector<Scalar>(3), Field::real), PreconditionError);
    CHECK_THROWS_AS(Matrix(1, 1, std::vector<Scalar>{{0, 1}}, Field::real), PreconditionError);
    const Matrix c = Matrix(1, 1, std::vector<Scalar>{{0, 1}}, Field::complex);
    CHECK(c.adjoint()(0, 0) == Scalar{0, -1});
    CHECK(unitarity_defect(Matrix::identity(3)) == 0.0);
}

TEST_CASE("SVD reconstructs and matches the power-iteration reference")
{
    for (Field f : {Field::real, Field::complex})
        for (auto [n, m] : {std::pair{1, 1}, {2, 3}, {3, 2}, {4, 4}, {5, 3}}) {
            const Matrix a = random_matrix(n, m, f, 17 + n * 10 + m);
            const SvdFactors s = svd(a);
            CHECK(max_abs_diff(s.reconstruct(), a) < 1e-12);
            CHECK(unitarity_defect(s.U) < 1e-12);
            CHECK(unitarity_defect(s.V) < 1e-12);
            CHECK(std::is_sorted(s.singular.rbegin(), s.singular.rend()));
            CHECK(s.singular.front() == doctest::Approx(oracle::spectral(dense(a))).epsilon(1e-9));
            if (f == Field::real) {
                CHECK(s.U.is_real());
                CHECK(s.V.is_real());
            }
        }
}

TEST_CASE("SVD of rank-deficient and zero matrices")
{
    const Matrix rank1({{1, 2}, {2, 4}, {3, 6}});
    const SvdFactors s = svd(rank1);
    CHECK(s.singular[0] == doctest::Approx(std::sqrt(14.0 * 5.0)));
    CHECK(s.singular[1] < 1e-12);
    CHECK(max_abs_diff(s.reconstruct(), rank1) < 1e-12);
    CHECK(unitarity_defect(s.U) < 1e-12);

    const SvdFactors z = svd(Matrix(2, 3));
    CHECK(z.singular == std::vector<double>{0.0, 0.0});
    CHECK(unitarity_defect(z.V) < 1e-12);
}

TEST_CASE("gram eigen and clustering")
{
    const Matrix a({{3, 0}, {0, 3}, {0, 0}});
    const GramEigen ge = gram_eigen(a);
    CHECK(ge.values[0] == doctest::Approx(9.0));
    CHECK(ge.values[1] == doctest::Approx(9.0));
    const auto groups = cluster_eigenvalues(ge.values, 1e-9);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0] == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK(cluster_eigenvalues({4.0, 2.0, 2.0, 0.0}, 1e-9).size() == 3);

    // eigenvalues padded to m for wide matrices
    const GramEigen wide = gram_eigen(Matrix({{1, 1, 1}}));
    REQUIRE(wide.values.size() == 3);
    CHECK(wide.values[0] == doctest::Approx(3.0));
    CHECK(wide.values[2] == doctest::Approx(0.0));
}

TEST_CASE("orthonormal completion")
{
    const auto cols = complete_orthonormal_basis({Vector{{1 / std::sqrt(2.0), 0}, {0, 1 / std::sqrt(2.0)}, {0, 0}}}, 3);
    REQUIRE(cols.size() == 3);
    const Matrix q = Matrix::from_columns(cols, Field::complex);
    CHECK(unitarity_defect(q) < 1e-12);
}
