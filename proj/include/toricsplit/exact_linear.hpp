#pragma once

// Exact integer / rational linear algebra on dense matrices.
//
// Everything here is exact: integers are GMP mpz values, rationals are
// canonicalized mpq values. Matrices are small (the largest in scope is
// 12 x 12) so dense storage and schoolbook elimination are used throughout.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toricsplit {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols);
  static Matrix from_columns(const std::vector<std::vector<T>>& cols,
                             std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row_span(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const T> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<T> row(std::size_t r) const;
  std::vector<T> col(std::size_t c) const;

  Matrix transpose() const;
  std::vector<T> apply(std::span<const T> x) const;

  void swap_rows(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const T& factor);
  void negate_row(std::size_t r);

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

RatMatrix to_rational(const IntMatrix& m);
// Returns nullopt if some entry is not an integer.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

Int dot(std::span<const Int> a, std::span<const Int> b);
Int gcd_of(std::span<const Int> v);
bool is_primitive(std::span<const Int> v);

// ---------------------------------------------------------------------------
// Integer algorithms

struct HermiteForm {
  IntMatrix h;  // row Hermite normal form of A
  IntMatrix u;  // unimodular, u * A == h
  std::vector<std::size_t> pivot_cols;  // one per nonzero row of h
  std::size_t rank() const { return pivot_cols.size(); }
};

// Row Hermite normal form: h is in row echelon form, pivots are positive and
// every entry above a pivot lies in [0, pivot).
HermiteForm hnf(const IntMatrix& a);

struct IntegralSolution {
  IntMatrix x;                          // a * x == b
  std::vector<IntVector> kernel_basis;  // Z-basis of {v : a * v == 0}
};

// Solves a * x == b over the integers. Throws Error("dimension") when the row
// counts differ; returns nullopt when no integral solution exists.
std::optional<IntegralSolution> solve_integral(const IntMatrix& a,
                                               const IntMatrix& b);

// Z-basis of the integer kernel of a.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

// Bareiss fraction-free determinant.
Int determinant(const IntMatrix& a);

// ---------------------------------------------------------------------------
// Rational algorithms

struct RowReduced {
  RatMatrix r;                          // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // pivot column of each nonzero row
};

RowReduced rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
// Basis of the right kernel, one vector per free column in increasing column
// order. The vector for free column f has a 1 in position f.
std::vector<RatVector> kernel_basis(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational determinant(const RatMatrix& m);

// Scales a nonzero rational vector to a primitive integer vector (same
// direction, gcd 1).
IntVector clear_denominators(std::span<const Rational> v);

std::string to_string(const IntVector& v, const char* sep = ",");

}  // namespace toricsplit
