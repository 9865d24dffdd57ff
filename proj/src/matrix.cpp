#include "spdiv/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <utility>

#include "spdiv/error.hpp"

namespace spdiv {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::kNotSquare, "ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw Error(ErrorKind::kNotSquare,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(c),
                  {i});
    }
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-1.0) * b; }

Matrix operator*(double s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
  assert(a.cols() == x.size());
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

double norm_inf(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double sum = 0.0;
    for (double v : a.row(i)) sum += std::abs(v);
    best = std::max(best, sum);
  }
  return best;
}

double norm_inf(std::span<const double> x) {
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v));
  return best;
}

LuFactorization lu_factor(Matrix a, double pivot_tolerance) {
  if (!a.square()) throw Error(ErrorKind::kNotSquare, "lu_factor: matrix is not square");
  const std::size_t n = a.rows();
  LuFactorization f;
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  f.min_pivot = n == 0 ? 0.0 : std::abs(a(0, 0));

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double pivot_mag = std::abs(a(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::abs(a(i, col)) > pivot_mag) {
        pivot_mag = std::abs(a(i, col));
        pivot_row = i;
      }
    }
    f.min_pivot = col == 0 ? pivot_mag : std::min(f.min_pivot, pivot_mag);
    if (!(pivot_mag >= pivot_tolerance)) {
      throw Error(ErrorKind::kSingularSimilarity,
                  "pivot " + std::to_string(pivot_mag) + " below tolerance in column " +
                      std::to_string(col),
                  {col});
    }
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
      std::swap(f.perm[col], f.perm[pivot_row]);
    }
    const double pivot = a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const double factor = a(i, col) / pivot;
      a(i, col) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

std::vector<double> LuFactorization::solve(std::span<const double> rhs) const {
  const std::size_t n = lu.rows();
  assert(rhs.size() == n);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = rhs[perm[i]];
    for (std::size_t j = 0; j < i; ++j) acc -= lu(i, j) * x[j];
    x[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= lu(i, j) * x[j];
    x[i] = acc / lu(i, i);
  }
  return x;
}

}  // namespace spdiv
