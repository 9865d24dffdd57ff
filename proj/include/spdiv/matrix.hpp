#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spdiv {

// Small dense row-major matrix. Sizes here are at most a few hundred, so no
// attempt is made at blocking or vectorisation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

// max_i sum_j |a_ij|
double norm_inf(const Matrix& a);
double norm_inf(std::span<const double> x);

// Thrown (as Error{kSingularSimilarity}) when a pivot falls below
// pivot_tolerance in magnitude.
struct LuFactorization {
  Matrix lu;
  std::vector<std::size_t> perm;
  double min_pivot = 0.0;

  std::vector<double> solve(std::span<const double> rhs) const;
};

// Gaussian elimination with partial pivoting.
LuFactorization lu_factor(Matrix a, double pivot_tolerance);

}  // namespace spdiv
