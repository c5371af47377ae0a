#include "grassline/snf.hpp"

#include <algorithm>
#include <numeric>

namespace grassline {

namespace {

int degree(const Poly1& p) { return p.max_exponent(0); }

// Polynomial division with remainder over Q[t]; b nonzero.
std::pair<Poly1, Poly1> divmod(Poly1 a, const Poly1& b) {
  Poly1 q;
  const int db = degree(b);
  const Rational lead = b.coeff({db});
  while (!a.is_zero() && degree(a) >= db) {
    const int da = degree(a);
    const Poly1 step = tpow(da - db, a.coeff({da}) / lead);
    q += step;
    a -= step * b;
  }
  return {q, a};
}

void swap_rows(LaurentMatrix1& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(LaurentMatrix1& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

SnfResult smith_normal_form(const LaurentMatrix1& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "smith_normal_form needs a square matrix");
  if (!is_polynomial(m)) throw Error(ErrorCode::NotPolynomial, "smith_normal_form needs polynomial entries");
  const Poly1 det = determinant(m);
  if (det.is_zero()) throw Error(ErrorCode::SingularMatrix, "determinant is zero");
  if (!det.is_monomial()) throw Error(ErrorCode::NonMonomialDeterminant, "determinant has several terms");

  const std::size_t n = m.rows();
  // Invariant throughout: m = u * a * v.
  LaurentMatrix1 a = m;
  LaurentMatrix1 u = LaurentMatrix1::identity(n);
  LaurentMatrix1 v = LaurentMatrix1::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t pi = n, pj = n;
      int best = 0;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (a(i, j).is_zero()) continue;
          const int d = degree(a(i, j));
          if (pi == n || d < best) {
            best = d;
            pi = i;
            pj = j;
          }
        }
      if (pi == n) throw Error(ErrorCode::InternalInconsistency, "singular block during elimination");
      if (pi != k) {
        swap_rows(a, pi, k);
        swap_cols(u, pi, k);
      }
      if (pj != k) {
        swap_cols(a, pj, k);
        swap_rows(v, pj, k);
      }
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k).is_zero()) continue;
        auto [q, r] = divmod(a(i, k), a(k, k));
        // row_i -= q row_k; compensate with col_k(u) += q col_i(u)
        for (std::size_t j = 0; j < n; ++j) a(i, j) -= q * a(k, j);
        for (std::size_t s = 0; s < n; ++s) u(s, k) += u(s, i) * q;
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j).is_zero()) continue;
        auto [q, r] = divmod(a(k, j), a(k, k));
        // col_j -= q col_k; compensate with row_k(v) += q row_j(v)
        for (std::size_t i = 0; i < n; ++i) a(i, j) -= q * a(i, k);
        for (std::size_t s = 0; s < n; ++s) v(k, s) += q * v(j, s);
        if (!r.is_zero()) clean = false;
      }
      if (clean) {
        bool done = true;
        for (std::size_t i = k + 1; i < n; ++i) done = done && a(i, k).is_zero() && a(k, i).is_zero();
        if (done) break;
      }
    }
  }

  std::vector<int> exps(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!a(k, k).is_monomial())
      throw Error(ErrorCode::InternalInconsistency, "diagonal entry is not a monomial");
    const auto& [e, c] = *a(k, k).terms().begin();
    exps[k] = e[0];
    for (std::size_t s = 0; s < n; ++s) u(s, k) *= Poly1(c);
  }

  // Sort ascending; u D v = (u P^T)(P D P^T)(P v) for a permutation P.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return exps[x] < exps[y]; });
  LaurentMatrix1 u2(n, n), v2(n, n);
  std::vector<int> sorted(n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted[k] = exps[order[k]];
    for (std::size_t s = 0; s < n; ++s) {
      u2(s, k) = u(s, order[k]);
      v2(k, s) = v(order[k], s);
    }
  }

  const Poly1 du = determinant(u2);
  if (!du.is_constant() || du.is_zero())
    throw Error(ErrorCode::InternalInconsistency, "left factor is not unimodular");
  const Rational c = du.constant_term();
  for (std::size_t s = 0; s < n; ++s) {
    u2(s, 0) *= Poly1(1 / c);
    v2(0, s) *= Poly1(c);
  }
  return {u2, sorted, v2};
}

}  // namespace grassline
