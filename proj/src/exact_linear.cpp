#include "toricsplit/exact_linear.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "toricsplit/error.hpp"

namespace toricsplit {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw Error("dimension", "ragged matrix literal");
    for (const auto& v : r) data_.push_back(v);
  }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows,
                               std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("dimension", "ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row_span(i).begin());
  }
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& cols,
                                  std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("dimension", "ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t r) const {
  auto s = row_span(r);
  return {s.begin(), s.end()};
}

template <typename T>
std::vector<T> Matrix<T>::col(std::size_t c) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <typename T>
std::vector<T> Matrix<T>::apply(std::span<const T> x) const {
  if (x.size() != cols_) throw Error("dimension", "matrix-vector size mismatch");
  std::vector<T> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    T acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn((*this)(i, j)) != 0) acc += (*this)(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T>
void Matrix<T>::add_row_multiple(std::size_t target, std::size_t source,
                                 const T& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn((*this)(source, j)) != 0) (*this)(target, j) += factor * (*this)(source, j);
  }
}

template <typename T>
void Matrix<T>::negate_row(std::size_t r) {
  for (auto& v : row_span(r)) v = -v;
}

template <typename T>
bool Matrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const T& v) { return sgn(v) == 0; });
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error("dimension", "matrix product size mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

template class Matrix<Int>;
template class Matrix<Rational>;
template Matrix<Int> operator*(const Matrix<Int>&, const Matrix<Int>&);
template Matrix<Rational> operator*(const Matrix<Rational>&, const Matrix<Rational>&);

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  }
  return r;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw Error("dimension", "dot product size mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Int gcd_of(std::span<const Int> v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_primitive(std::span<const Int> v) { return gcd_of(v) == 1; }

// ---------------------------------------------------------------------------

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteForm out{a, IntMatrix::identity(m), {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;

  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // Euclid on the column: repeatedly move the smallest nonzero entry into
    // the pivot row and reduce the others modulo it.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i) {
        if (sgn(h(i, col)) == 0) continue;
        if (best == m || mpz_cmpabs(h(i, col).get_mpz_t(), h(best, col).get_mpz_t()) < 0) best = i;
      }
      if (best == m) break;
      h.swap_rows(row, best);
      u.swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (sgn(h(i, col)) == 0) continue;
        Int q = floor_div(h(i, col), h(row, col));
        h.add_row_multiple(i, row, -q);
        u.add_row_multiple(i, row, -q);
        if (sgn(h(i, col)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(row, col)) == 0) continue;
    if (sgn(h(row, col)) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(h(i, col), h(row, col));
      h.add_row_multiple(i, row, -q);
      u.add_row_multiple(i, row, -q);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

std::optional<IntegralSolution> solve_integral(const IntMatrix& a,
                                               const IntMatrix& b) {
  if (a.rows() != b.rows()) {
    throw Error("dimension", "solve_integral: A has " + std::to_string(a.rows()) +
                                 " rows but B has " + std::to_string(b.rows()));
  }
  const std::size_t n = a.cols();
  const std::size_t r = b.cols();

  // u * A^T = h, so A * u^T = h^T; substitute x = u^T * y.
  HermiteForm form = hnf(a.transpose());
  const std::size_t rk = form.rank();

  IntMatrix y(n, r);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t k = 0; k < rk; ++k) {
      const std::size_t p = form.pivot_cols[k];
      Int rhs = b(p, c);
      for (std::size_t k2 = 0; k2 < k; ++k2) rhs -= form.h(k2, p) * y(k2, c);
      const Int& pivot = form.h(k, p);
      if (!mpz_divisible_p(rhs.get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
      y(k, c) = rhs / pivot;
    }
  }
  IntMatrix x = form.u.transpose() * y;
  if (!(a * x == b)) return std::nullopt;

  IntegralSolution sol{std::move(x), {}};
  for (std::size_t k = rk; k < n; ++k) sol.kernel_basis.push_back(form.u.row(k));
  return sol;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  HermiteForm form = hnf(a.transpose());
  std::vector<IntVector> basis;
  for (std::size_t k = form.rank(); k < a.cols(); ++k) basis.push_back(form.u.row(k));
  return basis;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("dimension", "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------

RowReduced rref(RatMatrix m) {
  RowReduced out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    Rational inv = 1 / m(row, col);
    for (auto& v : m.row_span(row)) v *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != row && sgn(m(i, col)) != 0) {
        Rational f = -m(i, col);
        m.add_row_multiple(i, row, f);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.r = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RowReduced red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) v[red.pivot_cols[k]] = -red.r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("dimension", "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowReduced red = rref(std::move(aug));
  if (red.pivot_cols.size() < n || red.pivot_cols[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.r(i, n + j);
  return inv;
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error("dimension", "determinant of non-square matrix");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      Rational f = -m(i, k) / m(k, k);
      m.add_row_multiple(i, k, f);
    }
  }
  return det;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, Int(x.get_den()));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  Int g = gcd_of(out);
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

std::string to_string(const IntVector& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace toricsplit
