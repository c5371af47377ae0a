#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <type_traits>
#include <vector>

#include "grassline/errors.hpp"
#include "grassline/laurent.hpp"
#include "grassline/rational.hpp"

namespace grassline {

// Dense row-major matrix over a commutative ring T (Rational or LaurentPoly).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  template <class F>
  auto map(F f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == T(0)) continue;
          out(i, j) += x * b(k, j);
        }
      }
    return out;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x = s * x;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using LaurentMatrix1 = Matrix<Poly1>;
using LaurentMatrix2 = Matrix<Poly2>;

namespace detail {

// Determinant of the minor on the given rows/columns by Laplace expansion
// over column subsets; exact over any commutative ring.
template <class T>
T minor_det(const Matrix<T>& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return T(1);
  std::vector<T> f(std::size_t{1} << n);
  std::vector<bool> have(f.size(), false);
  f[0] = T(1);
  have[0] = true;
  for (std::uint32_t mask = 1; mask < f.size(); ++mask) {
    const int k = __builtin_popcount(mask);
    const std::size_t row = rows[k - 1];
    T acc(0);
    int above = k - 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const std::uint32_t rest = mask & ~(1u << j);
      const T& entry = a(row, cols[j]);
      if (!(entry == T(0)) && have[rest] && !(f[rest] == T(0))) {
        if (above % 2 == 0) acc += entry * f[rest];
        else acc -= entry * f[rest];
      }
      --above;
    }
    f[mask] = acc;
    have[mask] = true;
  }
  return f.back();
}

}  // namespace detail

template <class T>
T determinant(const Matrix<T>& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  std::vector<std::size_t> idx(a.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::minor_det(a, idx, idx);
}

Rational determinant(const QMatrix& a);

template <class T>
Matrix<T> adjugate(const Matrix<T>& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "adjugate of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> out(n, n);
  if (n == 1) {
    out(0, 0) = T(1);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      T m = detail::minor_det(a, rows, cols);
      out(j, i) = (i + j) % 2 == 0 ? m : -m;
    }
  }
  return out;
}

// Inverse of a determinant-one Laurent matrix, which is its adjugate.
template <std::size_t N>
Matrix<LaurentPoly<N>> adjugate_inverse(const Matrix<LaurentPoly<N>>& a) {
  if (determinant(a) != LaurentPoly<N>(1)) throw Error(ErrorCode::DeterminantNotOne, "adjugate_inverse needs det = 1");
  return adjugate(a);
}

template <class T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<T> out(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

template <std::size_t N>
Matrix<LaurentPoly<N>> to_laurent(const QMatrix& a) {
  return a.map([](const Rational& x) { return LaurentPoly<N>(x); });
}

// Substitutions on Laurent matrices.
template <std::size_t N>
Matrix<LaurentPoly<N>> scale_variables(const Matrix<LaurentPoly<N>>& a, const std::array<Rational, N>& s) {
  return a.map([&](const LaurentPoly<N>& p) { return p.scale_variables(s); });
}

// Constant term, valid when every entry is a polynomial in the relevant sense.
template <std::size_t N>
QMatrix constant_part(const Matrix<LaurentPoly<N>>& a) {
  return a.map([](const LaurentPoly<N>& p) { return p.constant_term(); });
}

// Univariate helpers.
LaurentMatrix1 tpow_diag(const std::vector<int>& exps);
QMatrix coefficient(const LaurentMatrix1& a, int k);  // coefficient of t^k
int min_exponent(const LaurentMatrix1& a);
int max_exponent(const LaurentMatrix1& a);
bool is_polynomial(const LaurentMatrix1& a);  // all exponents >= 0
LaurentMatrix1 evaluate_shift(const LaurentMatrix1& a, int d);  // multiply by t^d

}  // namespace grassline
