#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include "grassline/rational.hpp"

namespace grassline {

// Sparse Laurent polynomial in N variables over Q. Zero coefficients are
// never stored.
template <std::size_t N>
class LaurentPoly {
 public:
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT: constants convert implicitly
    if (!grassline::is_zero(c)) terms_.emplace(Exponent{}, c);
  }
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly monomial(const Exponent& e, const Rational& c = 1) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
  }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coeff(Exponent{}); }

  void add_term(const Exponent& e, const Rational& c) {
    if (grassline::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (grassline::is_zero(it->second)) terms_.erase(it);
    }
  }

  // Extremal exponent of variable k over the support; 0 for the zero polynomial.
  int min_exponent(std::size_t k) const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first[k];
    for (const auto& [e, c] : terms_) m = std::min(m, e[k]);
    return m;
  }
  int max_exponent(std::size_t k) const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first[k];
    for (const auto& [e, c] : terms_) m = std::max(m, e[k]);
    return m;
  }

  // Rebuild with each term mapped through f(exponent, coeff) -> (exponent', coeff').
  // Colliding images are summed.
  template <std::size_t M, class F>
  LaurentPoly<M> map_terms(F f) const {
    LaurentPoly<M> out;
    for (const auto& [e, c] : terms_) {
      auto [e2, c2] = f(e, c);
      out.add_term(e2, c2);
    }
    return out;
  }

  template <class Pred>
  LaurentPoly filter(Pred keep) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
      if (keep(e)) out.terms_.emplace(e, c);
    return out;
  }

  // x_k -> s_k x_k for every variable.
  LaurentPoly scale_variables(const std::array<Rational, N>& s) const {
    return map_terms<N>([&](const Exponent& e, const Rational& c) {
      Rational f = c;
      for (std::size_t k = 0; k < N; ++k) f *= rational_pow(s[k], e[k]);
      return std::make_pair(e, f);
    });
  }

  LaurentPoly shifted(const Exponent& d) const {
    return map_terms<N>([&](const Exponent& e, const Rational& c) {
      Exponent e2 = e;
      for (std::size_t k = 0; k < N; ++k) e2[k] += d[k];
      return std::make_pair(e2, c);
    });
  }

  // Evaluation at a point with nonzero coordinates wherever negative
  // exponents occur.
  Rational evaluate(const std::array<Rational, N>& x) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t k = 0; k < N; ++k) term *= rational_pow(x[k], e[k]);
      acc += term;
    }
    return acc;
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

using Poly1 = LaurentPoly<1>;
using Poly2 = LaurentPoly<2>;
using Poly3 = LaurentPoly<3>;

inline Poly1 tpow(int k, const Rational& c = 1) { return Poly1::monomial({k}, c); }
inline Poly2 mono2(int p, int q, const Rational& c = 1) { return Poly2::monomial({p, q}, c); }

// p = neg + nonneg with neg supported on negative exponents.
struct PolySplit {
  Poly1 neg;
  Poly1 nonneg;
};
PolySplit split_neg_nonneg(const Poly1& p);

}  // namespace grassline
