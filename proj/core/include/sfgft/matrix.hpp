#pragma once

#include <span>
#include <vector>

namespace sfgft {

/// Dense row-major matrix of doubles.
///
/// Everything in this library runs at desk scale (a few thousand vertices at
/// most), so dense storage is used throughout; there is no sparse path.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<double> row(int i) { return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }
    std::span<const double> row(int i) const {
        return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
    }

    const std::vector<double>& data() const { return data_; }

    /// Column j as a vector (copies).
    std::vector<double> column(int j) const;

    bool all_finite() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Products. multiply_at_b computes A^T * B without forming the transpose.
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix multiply_at_b(const Matrix& a, const Matrix& b);
std::vector<double> multiply(const Matrix& a, std::span<const double> x);
std::vector<double> multiply_transpose(const Matrix& a, std::span<const double> x);

Matrix transpose(const Matrix& a);

/// Largest absolute entry.
double max_abs(const Matrix& a);
/// Induced infinity norm (largest absolute row sum).
double inf_norm(const Matrix& a);
bool is_symmetric(const Matrix& a, double tol = 0.0);

/// x^T m x for symmetric m.
double quadratic_form(const Matrix& m, std::span<const double> x);

// Vector helpers.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
double inf_norm(std::span<const double> v);
bool all_finite(std::span<const double> v);

}  // namespace sfgft
