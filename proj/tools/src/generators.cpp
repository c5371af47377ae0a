#include "grassline/tools/generators.hpp"

#include <functional>

#include "grassline/linalg.hpp"

namespace grassline::tools {

int Generator::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Rational Generator::small_nonzero() {
  static const Rational choices[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                     Rational(-1, 2)};
  return choices[integer(0, 5)];
}

QMatrix Generator::unimodular(std::size_t r, int factors) {
  QMatrix h = QMatrix::identity(r);
  if (r < 2) return h;
  for (int k = 0; k < factors; ++k) {
    const auto i = static_cast<std::size_t>(integer(0, static_cast<int>(r) - 1));
    auto j = static_cast<std::size_t>(integer(0, static_cast<int>(r) - 2));
    if (j >= i) ++j;
    QMatrix e = QMatrix::identity(r);
    e(i, j) = integer(-2, 2);
    h = h * e;
  }
  return h;
}

QMatrix Generator::nilpotent(std::size_t r) {
  QMatrix n(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) n(i, j) = integer(-1, 1);
  const QMatrix h = unimodular(r);
  return h * n * inverse(h);
}

QMatrix Generator::nilpotent_of_type(const std::vector<int>& mu) {
  std::size_t r = 0;
  for (int k : mu) r += static_cast<std::size_t>(k);
  QMatrix n(r, r);
  std::size_t off = 0;
  for (int k : mu) {
    for (int i = 0; i + 1 < k; ++i) n(off + i, off + i + 1) = 1;
    off += static_cast<std::size_t>(k);
  }
  const QMatrix h = unimodular(r);
  return h * n * inverse(h);
}

LoopElement Generator::loop_element(std::size_t r, int factors) {
  LoopElement g = LoopElement::identity(r);
  for (int k = 0; k < factors; ++k) g = g * exp_embed(nilpotent(r));
  return g;
}

LaurentMatrix2 Generator::elementary_product(std::size_t r, int a_lo, int a_hi, int b_lo, int b_hi, int factors) {
  LaurentMatrix2 m = LaurentMatrix2::identity(r);
  if (r < 2) return m;
  for (int k = 0; k < factors; ++k) {
    const auto i = static_cast<std::size_t>(integer(0, static_cast<int>(r) - 1));
    auto j = static_cast<std::size_t>(integer(0, static_cast<int>(r) - 2));
    if (j >= i) ++j;
    LaurentMatrix2 e = LaurentMatrix2::identity(r);
    e(i, j) = mono2(integer(a_lo, a_hi), integer(b_lo, b_hi), integer(-1, 1));
    m = m * e;
  }
  return m;
}

GaugeElement Generator::gauge(std::size_t r) {
  GaugeElement h;
  h.h00 = elementary_product(r, 0, 1, 0, 1);
  h.h01 = elementary_product(r, 0, 1, -2, -1);
  h.h10 = elementary_product(r, -2, -1, 0, 1);
  h.h11 = elementary_product(r, -2, -1, -2, -1);
  return h;
}

LaurentMatrix1 Generator::monomial_det_matrix(std::size_t r) {
  const auto poly_elementary = [&](LaurentMatrix1& m) {
    for (int k = 0; k < 3; ++k) {
      const auto i = static_cast<std::size_t>(integer(0, static_cast<int>(r) - 1));
      auto j = static_cast<std::size_t>(integer(0, static_cast<int>(r) - 2));
      if (j >= i) ++j;
      LaurentMatrix1 e = LaurentMatrix1::identity(r);
      e(i, j) = tpow(integer(0, 2), integer(-2, 2));
      m = m * e;
    }
  };
  LaurentMatrix1 left = LaurentMatrix1::identity(r), right = LaurentMatrix1::identity(r);
  if (r >= 2) {
    poly_elementary(left);
    poly_elementary(right);
  }
  std::vector<int> exps(r);
  for (auto& e : exps) e = integer(0, 3);
  return left * tpow_diag(exps) * right;
}

std::vector<Coweight> dominant_coweights(std::size_t r, int bound) {
  std::vector<Coweight> out;
  std::vector<int> cur;
  const std::function<void(int, int)> rec = [&](int cap, int sum) {
    if (cur.size() == r) {
      if (sum == 0) out.emplace_back(cur);
      return;
    }
    for (int x = cap; x >= -bound; --x) {
      cur.push_back(x);
      rec(x, sum + x);
      cur.pop_back();
    }
  };
  if (r > 0) rec(bound, 0);
  return out;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace grassline::tools
