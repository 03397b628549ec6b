#include "normeq/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace normeq {

namespace {

using nlohmann::json;

Scalar parse_entry(const json& e, Field field)
{
    if (field == Field::real) {
        if (!e.is_number())
            throw FormatError("real matrix entries must be numbers");
        return {e.get<double>(), 0.0};
    }
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw FormatError("complex matrix entries must be [re, im] pairs");
    return {e[0].get<double>(), e[1].get<double>()};
}

std::size_t dimension(const json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_number_unsigned() || doc[key].get<std::size_t>() == 0)
        throw FormatError(std::string("\"") + key + "\" must be a positive integer");
    return doc[key].get<std::size_t>();
}

} // namespace

Matrix parse_matrix_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw FormatError("matrix document must be a JSON object");
    if (!doc.contains("field") || !doc["field"].is_string())
        throw FormatError("\"field\" must be \"real\" or \"complex\"");
    const std::string tag = doc["field"].get<std::string>();
    Field field;
    if (tag == "real")
        field = Field::real;
    else if (tag == "complex")
        field = Field::complex;
    else
        throw FormatError("\"field\" must be \"real\" or \"complex\"");
    const std::size_t n = dimension(doc, "rows");
    const std::size_t m = dimension(doc, "cols");
    if (!doc.contains("data") || !doc["data"].is_array())
        throw FormatError("\"data\" must be an array");

    std::vector<Scalar> data;
    data.reserve(n * m);
    const json& raw = doc["data"];
    const bool nested = !raw.empty() && raw[0].is_array()
                     && (field == Field::real || (!raw[0].empty() && raw[0][0].is_array()));
    if (nested) {
        if (raw.size() != n)
            throw FormatError("\"data\" must have one array per row");
        for (const auto& row : raw) {
            if (!row.is_array() || row.size() != m)
                throw FormatError("every row must have \"cols\" entries");
            for (const auto& e : row)
                data.push_back(parse_entry(e, field));
        }
    } else {
        if (raw.size() != n * m)
            throw FormatError("\"data\" length must equal rows*cols");
        for (const auto& e : raw)
            data.push_back(parse_entry(e, field));
    }
    for (const auto& z : data)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw FormatError("matrix entries must be finite");
    return Matrix(n, m, std::move(data), field);
}

Matrix read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

std::string format_double(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string matrix_to_json(const Matrix& a)
{
    std::string out = "{\"field\": \"" + std::string(to_string(a.field())) + "\", \"rows\": "
                    + std::to_string(a.rows()) + ", \"cols\": " + std::to_string(a.cols()) + ", \"data\": [";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j)
                out += ", ";
            const Scalar z = a(i, j);
            if (a.is_real())
                out += format_double(z.real());
            else
                out += "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

void write_matrix_file(const Matrix& a, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << matrix_to_json(a);
    if (!out)
        throw std::runtime_error("cannot write " + path);
}

} // namespace normeq
