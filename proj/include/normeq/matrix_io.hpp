#ifndef NORMEQ_MATRIX_IO_HPP
#define NORMEQ_MATRIX_IO_HPP

#include <string>
#include <string_view>

#include "normeq/matrix.hpp"

namespace normeq {

/// Raised on malformed matrix documents.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {"field": "real"|"complex", "rows": n, "cols": m, "data": [...]}. Data is
/// row-major, flat or nested by row; complex entries are [re, im] pairs.
Matrix parse_matrix_json(std::string_view text);
Matrix read_matrix_file(const std::string& path);

std::string matrix_to_json(const Matrix& a);
/// Throws std::runtime_error when the path cannot be written.
void write_matrix_file(const Matrix& a, const std::string& path);

/// %.17g, "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double x);

} // namespace normeq

#endif // NORMEQ_MATRIX_IO_HPP
