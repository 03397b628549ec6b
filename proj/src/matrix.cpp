#include "normeq/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace normeq {

namespace {

void require_real(std::span<const Scalar> data)
{
    for (const auto& v : data)
        if (v.imag() != 0.0)
            throw PreconditionError("real-field matrix has a nonzero imaginary part");
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), data_(rows * cols), field_(field)
{
    if (rows == 0 || cols == 0)
        throw PreconditionError("matrix dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data, Field field)
    : rows_(rows), cols_(cols), data_(std::move(data)), field_(field)
{
    if (rows == 0 || cols == 0)
        throw PreconditionError("matrix dimensions must be positive");
    if (data_.size() != rows * cols)
        throw PreconditionError("matrix data length does not match rows*cols");
    if (field_ == Field::real)
        require_real(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0)
        throw PreconditionError("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw PreconditionError("ragged matrix literal");
        for (double v : r)
            data_.emplace_back(v, 0.0);
    }
}

Matrix Matrix::identity(std::size_t n, Field field)
{
    Matrix a(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        a(i, i) = 1.0;
    return a;
}

Matrix Matrix::diagonal(std::span<const Scalar> d, Field field)
{
    Matrix a(d.size(), d.size(), field);
    for (std::size_t i = 0; i < d.size(); ++i)
        a(i, i) = d[i];
    if (field == Field::real)
        require_real(a.data_);
    return a;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, Field field)
{
    if (columns.empty())
        throw PreconditionError("no columns");
    Matrix a(columns.front().size(), columns.size(), field);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != a.rows_)
            throw PreconditionError("columns differ in length");
        for (std::size_t i = 0; i < a.rows_; ++i)
            a(i, j) = columns[j][i];
    }
    if (field == Field::real)
        require_real(a.data_);
    return a;
}

Vector Matrix::column(std::size_t j) const
{
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::adjoint() const
{
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = std::conj((*this)(i, j));
    return t;
}

Matrix Matrix::with_field(Field field) const
{
    return Matrix(rows_, cols_, data_, field);
}

Vector Matrix::apply(std::span<const Scalar> x) const
{
    if (x.size() != cols_)
        throw PreconditionError("apply: vector length does not match column count");
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = 0.0;
        const Scalar* r = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            acc += r[j] * x[j];
        y[i] = acc;
    }
    return y;
}

Vector Matrix::apply_adjoint(std::span<const Scalar> y) const
{
    if (y.size() != rows_)
        throw PreconditionError("apply_adjoint: vector length does not match row count");
    Vector z(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar* r = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            z[j] += std::conj(r[j]) * y[i];
    }
    return z;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw PreconditionError("matrix product: inner dimensions differ");
    const Field f = (field_ == Field::complex || rhs.field_ == Field::complex) ? Field::complex
                                                                               : Field::real;
    Matrix out(rows_, rhs.cols_, f);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar a = (*this)(i, k);
            if (a == Scalar{})
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw PreconditionError("matrix difference: shapes differ");
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k)
        out.data_[k] -= rhs.data_[k];
    if (rhs.field_ == Field::complex)
        out.field_ = Field::complex;
    return out;
}

Matrix Matrix::scaled(Scalar c) const
{
    Matrix out = *this;
    for (auto& v : out.data_)
        v *= c;
    if (c.imag() != 0.0)
        out.field_ = Field::complex;
    return out;
}

double Matrix::max_abs() const
{
    double best = 0.0;
    for (const auto& v : data_)
        best = std::max(best, std::abs(v));
    return best;
}

double Matrix::frobenius() const
{
    double acc = 0.0;
    for (const auto& v : data_)
        acc += std::norm(v);
    return std::sqrt(acc);
}

Scalar inner(std::span<const Scalar> x, std::span<const Scalar> y)
{
    Scalar acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += std::conj(x[i]) * y[i];
    return acc;
}

double max_abs_diff(const Matrix& a, const Matrix& b)
{
    double best = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
    return best;
}

double unitarity_defect(const Matrix& q)
{
    const Matrix g = q.adjoint() * q;
    return max_abs_diff(g, Matrix::identity(g.rows(), Field::complex));
}

} // namespace normeq
