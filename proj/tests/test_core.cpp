#include <doctest.h>

#include <cmath>
#include <limits>

#include "normeq/core.hpp"
#include "support/oracle.hpp"

using namespace normeq;

TEST_CASE("ExtIndex parsing and ordering")
{
    CHECK(ExtIndex::parse("inf").is_infinite());
    CHECK(ExtIndex::parse("Infinity").is_infinite());
    CHECK(ExtIndex::parse("INF").is_infinite());
    CHECK(ExtIndex::parse("1").is_one());
    CHECK(ExtIndex::parse("2").is_two());
    CHECK(ExtIndex::parse("1.5").value() == 1.5);
    CHECK_THROWS_AS(ExtIndex::parse("0.5"), PreconditionError);
    CHECK_THROWS_AS(ExtIndex::parse("abc"), PreconditionError);
    CHECK_THROWS_AS(ExtIndex::parse("2x"), PreconditionError);
    CHECK_THROWS_AS(ExtIndex(std::nan("")), PreconditionError);
    CHECK(ExtIndex(std::numeric_limits<double>::infinity()).is_infinite());

    CHECK(ExtIndex::one() < ExtIndex(1.5));
    CHECK(ExtIndex(3.0) < ExtIndex::infinity());
    CHECK(ExtIndex(2.0) == ExtIndex::two());
    CHECK(ExtIndex::infinity().reciprocal() == 0.0);
    CHECK(ExtIndex::infinity().str() == "inf");
    CHECK(ExtIndex(1.5).str() == "1.5");
}

TEST_CASE("conjugate index")
{
    CHECK(conjugate(ExtIndex::one()).is_infinite());
    CHECK(conjugate(ExtIndex::infinity()).is_one());
    CHECK(conjugate(ExtIndex::two()).is_two());
    CHECK(conjugate(ExtIndex(3.0)).value() == doctest::Approx(1.5));
    CHECK(conjugate(ExtIndex(1.5)).value() == doctest::Approx(3.0));
    for (double p : {1.1, 1.7, 4.0, 10.0})
        CHECK(conjugate(conjugate(ExtIndex(p))).value() == doctest::Approx(p));
}

TEST_CASE("sign of difference is exact on tagged indices")
{
    CHECK(sign_of_difference(ExtIndex::two(), ExtIndex(2.0)) == 0);
    CHECK(sign_of_difference(ExtIndex::infinity(), ExtIndex(1e300)) == 1);
    CHECK(sign_of_difference(ExtIndex::one(), ExtIndex(1.0000001)) == -1);
}

TEST_CASE("vector norms against the reference")
{
    const Vector x{{3, 0}, {0, -4}, {1, 1}};
    const oracle::Vec y(x.begin(), x.end());
    for (double p : {1.0, 1.5, 2.0, 3.0, 7.0})
        CHECK(vector_norm(x, ExtIndex(p)) == doctest::Approx(oracle::lp(y, p)).epsilon(1e-14));
    CHECK(vector_norm(x, ExtIndex::infinity()) == 4.0);
    CHECK(vector_norm(Vector{{3, 0}, {4, 0}}, ExtIndex::two()) == 5.0);
    CHECK(vector_norm(Vector(3), ExtIndex(1.5)) == 0.0);
    // no overflow on large entries
    CHECK(vector_norm(Vector{{1e200, 0}, {1e200, 0}}, ExtIndex(3.0)) == doctest::Approx(1e200 * std::cbrt(2.0)));
}

TEST_CASE("K-class tests")
{
    CHECK(k_class_test(Vector{{1, 0}, {0, 1}, {-1, 0}}, KClass::K1));
    CHECK_FALSE(k_class_test(Vector{{1, 0}, {0, 0.5}}, KClass::K1));
    CHECK(k_class_test(Vector{{0, 0}, {2, 0}, {0, 0}}, KClass::Kminus1));
    CHECK_FALSE(k_class_test(Vector{{1, 0}, {1, 0}}, KClass::Kminus1));
    CHECK(k_class_test(Vector{{1, 0}, {7, 0}}, KClass::K0));
    // the zero vector is in every class
    for (KClass k : {KClass::K1, KClass::Kminus1, KClass::K0})
        CHECK(k_class_test(Vector(3), k));
    CHECK(k_class_from_sign(1) == KClass::K1);
    CHECK(k_class_from_sign(-1) == KClass::Kminus1);
    CHECK(k_class_from_sign(0) == KClass::K0);
}

TEST_CASE("vector comparison bound and its equality cases")
{
    const std::size_t m = 4;
    CHECK(prop1_factor(ExtIndex::one(), ExtIndex::two(), m) == doctest::Approx(2.0));
    CHECK(prop1_factor(ExtIndex::two(), ExtIndex::one(), m) == 1.0);
    CHECK(prop1_factor(ExtIndex::one(), ExtIndex::infinity(), m) == doctest::Approx(4.0));

    // ones: equality for r < p
    const Vector ones(m, Scalar{1, 0});
    CHECK(vector_norm(ones, ExtIndex::one()) == doctest::Approx(prop1_factor(ExtIndex::one(), ExtIndex::two(), m)
                                                                  * vector_norm(ones, ExtIndex::two())));
    // coordinate vector: equality for r > p
    Vector e(m);
    e[2] = 1.0;
    CHECK(vector_norm(e, ExtIndex(3.0)) == doctest::Approx(vector_norm(e, ExtIndex(1.5))));
    CHECK(prop1_equality_class(ExtIndex::two(), ExtIndex::one()) == KClass::K1);
    CHECK(prop1_equality_class(ExtIndex::two(), ExtIndex(3.0)) == KClass::Kminus1);
    CHECK(prop1_equality_class(ExtIndex(3.0), ExtIndex(3.0)) == KClass::K0);
}

TEST_CASE("phase")
{
    CHECK(phase(Scalar{}) == Scalar{1, 0});
    CHECK(phase(Scalar{-3, 0}) == Scalar{-1, 0});
    CHECK(std::abs(phase(Scalar{3, 4}) - Scalar{0.6, 0.8}) < 1e-15);
}
