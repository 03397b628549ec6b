#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "normeq/matrix_io.hpp"

using namespace normeq;

TEST_CASE("flat and nested real data")
{
    const Matrix flat = parse_matrix_json(R"({"field":"real","rows":2,"cols":3,"data":[1,2,3,4,5,6]})");
    const Matrix nested = parse_matrix_json(R"({"field":"real","rows":2,"cols":3,"data":[[1,2,3],[4,5,6]]})");
    CHECK(flat.rows() == 2);
    CHECK(flat.cols() == 3);
    CHECK(flat.is_real());
    CHECK(flat(1, 0) == Scalar{4, 0});
    CHECK(max_abs_diff(flat, nested) == 0.0);
}

TEST_CASE("complex pairs")
{
    const Matrix a = parse_matrix_json(R"({"field":"complex","rows":1,"cols":2,"data":[[1,0],[0,-1]]})");
    CHECK_FALSE(a.is_real());
    CHECK(a(0, 1) == Scalar{0, -1});
    const Matrix b = parse_matrix_json(R"({"field":"complex","rows":1,"cols":2,"data":[[[1,0],[0,-1]]]})");
    CHECK(max_abs_diff(a, b) == 0.0);
}

TEST_CASE("round trip is lossless")
{
    const Matrix a(2, 2, {Scalar{0.1, 1.0 / 3}, Scalar{-1e-300, 0}, Scalar{std::sqrt(2.0), -0.5}, Scalar{7, 1e17}},
                   Field::complex);
    const Matrix b = parse_matrix_json(matrix_to_json(a));
    CHECK(max_abs_diff(a, b) == 0.0);
    CHECK_FALSE(b.is_real());

    const Matrix r({{1.0 / 7, -2}, {3e-9, 4}});
    const Matrix back = parse_matrix_json(matrix_to_json(r));
    CHECK(back.is_real());
    CHECK(max_abs_diff(r, back) == 0.0);

    const auto path = std::filesystem::temp_directory_path() / "normeq_io_roundtrip.json";
    write_matrix_file(r, path.string());
    CHECK(max_abs_diff(read_matrix_file(path.string()), r) == 0.0);
    std::filesystem::remove(path);
}

TEST_CASE("malformed documents")
{
    const char* bad[] = {
        "not json",
        R"([1,2])",
        R"({"field":"quaternion","rows":1,"cols":1,"data":[1]})",
        R"({"rows":1,"cols":1,"data":[1]})",
        R"({"field":"real","rows":0,"cols":1,"data":[]})",
        R"({"field":"real","rows":1.5,"cols":1,"data":[1]})",
        R"({"field":"real","rows":2,"cols":2,"data":[1,2,3]})",
        R"({"field":"real","rows":2,"cols":2,"data":[[1,2],[3]]})",
        R"({"field":"real","rows":1,"cols":1,"data":["x"]})",
        R"({"field":"real","rows":1,"cols":1,"data":[[1,0]]})",
        R"({"field":"complex","rows":1,"cols":1,"data":[1]})",
        R"({"field":"complex","rows":1,"cols":1,"data":[[1,2,3]]})",
        R"({"field":"real","rows":1,"cols":1,"data":[1e999]})",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_matrix_json(text), FormatError);
    }
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/dir/m.json"), FormatError);
    CHECK_THROWS(write_matrix_file(Matrix::identity(1), "/nonexistent/dir/m.json"));
}

TEST_CASE("format_double")
{
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(INFINITY) == "inf");
    CHECK(format_double(-INFINITY) == "-inf");
    CHECK(format_double(NAN) == "nan");
    CHECK(std::stod(format_double(0.1)) == 0.1);
}
