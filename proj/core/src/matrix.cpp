#include "grassline/matrix.hpp"

#include <algorithm>
#include <limits>

namespace grassline {

Rational determinant(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  QMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

PolySplit split_neg_nonneg(const Poly1& p) {
  return {p.filter([](const Poly1::Exponent& e) { return e[0] < 0; }),
          p.filter([](const Poly1::Exponent& e) { return e[0] >= 0; })};
}

LaurentMatrix1 tpow_diag(const std::vector<int>& exps) {
  LaurentMatrix1 d(exps.size(), exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) d(i, i) = tpow(exps[i]);
  return d;
}

QMatrix coefficient(const LaurentMatrix1& a, int k) {
  return a.map([k](const Poly1& p) { return p.coeff({k}); });
}

int min_exponent(const LaurentMatrix1& a) {
  int m = std::numeric_limits<int>::max();
  bool any = false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) {
        m = std::min(m, a(i, j).min_exponent(0));
        any = true;
      }
  return any ? m : 0;
}

int max_exponent(const LaurentMatrix1& a) {
  int m = std::numeric_limits<int>::min();
  bool any = false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) {
        m = std::max(m, a(i, j).max_exponent(0));
        any = true;
      }
  return any ? m : 0;
}

bool is_polynomial(const LaurentMatrix1& a) { return min_exponent(a) >= 0; }

LaurentMatrix1 evaluate_shift(const LaurentMatrix1& a, int d) {
  return a.map([d](const Poly1& p) { return p.shifted({d}); });
}

}  // namespace grassline
