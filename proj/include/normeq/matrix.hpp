#ifndef NORMEQ_MATRIX_HPP
#define NORMEQ_MATRIX_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "normeq/core.hpp"

namespace normeq {

/// Dense row-major matrix with n rows and m columns. The field tag decides
/// whether induced norms maximize over R^m or C^m; real-tagged matrices
/// never carry imaginary parts.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field = Field::real);
    /// Throws PreconditionError on size mismatch or imaginary parts under Field::real.
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data, Field field);
    /// Real matrix from nested rows.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n, Field field = Field::real);
    static Matrix diagonal(std::span<const Scalar> d, Field field);
    static Matrix from_columns(const std::vector<Vector>& columns, Field field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool is_real() const { return field_ == Field::real; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Scalar> data() const { return data_; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;

    /// Conjugate transpose; keeps the field tag.
    Matrix adjoint() const;
    /// Same entries, field tag replaced. Real tag requires zero imaginary parts.
    Matrix with_field(Field field) const;

    Vector apply(std::span<const Scalar> x) const;
    /// A* y without forming the adjoint.
    Vector apply_adjoint(std::span<const Scalar> y) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(Scalar c) const;

    /// max |a_ij|
    double max_abs() const;
    double frobenius() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
    Field field_ = Field::real;
};

/// Σ conj(x_i) y_i
Scalar inner(std::span<const Scalar> x, std::span<const Scalar> y);

/// max_ij |A_ij - B_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

/// ‖Q*Q - I‖ entrywise max.
double unitarity_defect(const Matrix& q);

} // namespace normeq

#endif // NORMEQ_MATRIX_HPP
