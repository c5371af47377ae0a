#pragma once

#include <map>
#include <vector>

#include "grassline/matrix.hpp"

namespace grassline {

// Weakly decreasing integer tuple with zero sum.
class Coweight {
 public:
  explicit Coweight(std::vector<int> entries);
  static Coweight zero(std::size_t r) { return Coweight(std::vector<int>(r, 0)); }

  std::size_t rank() const { return entries_.size(); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t k) const { return entries_[k]; }
  bool is_zero() const;

  friend bool operator==(const Coweight& a, const Coweight& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Coweight& a, const Coweight& b) { return !(a == b); }
  friend bool operator<(const Coweight& a, const Coweight& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<int> entries_;
};

bool coweight_leq(const Coweight& mu, const Coweight& lambda);
Coweight coweight_neg_w0(const Coweight& lambda);
bool is_symmetric(const Coweight& lambda);
bool is_small(const Coweight& lambda);
std::map<int, int> multiplicities(const Coweight& lambda);
int multiplicity(const Coweight& lambda, int i);

// Jordan block sizes of a nilpotent matrix, descending.
std::vector<int> nilpotent_jordan_type(const QMatrix& x);
bool is_nilpotent(const QMatrix& x);
Coweight lambda_of_nilpotent(const QMatrix& x);

// An element of SL(r)[t^-1]_1: polynomial in t^-1, constant term 1, det 1.
class LoopElement {
 public:
  explicit LoopElement(LaurentMatrix1 body);
  static LoopElement identity(std::size_t r);

  std::size_t rank() const { return body_.rows(); }
  const LaurentMatrix1& matrix() const { return body_; }
  // Largest k with a nonzero coefficient of t^-k.
  int degree() const;
  // Coefficient of t^-k.
  QMatrix coefficient(int k) const;

  LoopElement inverse() const;
  // g(c t^-1)
  LoopElement rescaled(const Rational& c) const;
  // h g h^-1 for a constant invertible h
  LoopElement conjugated(const QMatrix& h) const;

  friend LoopElement operator*(const LoopElement& a, const LoopElement& b);
  friend bool operator==(const LoopElement& a, const LoopElement& b) { return a.body_ == b.body_; }
  friend bool operator!=(const LoopElement& a, const LoopElement& b) { return !(a == b); }

 private:
  struct Unchecked {};
  LoopElement(LaurentMatrix1 body, Unchecked) : body_(std::move(body)) {}
  LaurentMatrix1 body_;
};

LoopElement iota(const LoopElement& g);
QMatrix pi(const LoopElement& g);
LoopElement exp_embed(const QMatrix& x);

// gamma = q1 * t^lambda * q2 with q1, q2 in SL(r)[t].
class Factorization {
 public:
  Factorization(LaurentMatrix1 q1, Coweight lambda, LaurentMatrix1 q2, const LoopElement& source);

  const LaurentMatrix1& q1() const { return q1_; }
  const Coweight& lambda() const { return lambda_; }
  const LaurentMatrix1& q2() const { return q2_; }
  const LoopElement& source() const { return source_; }

 private:
  LaurentMatrix1 q1_;
  Coweight lambda_;
  LaurentMatrix1 q2_;
  LoopElement source_;
};

Factorization factorize(const LoopElement& g);
Coweight stratum(const LoopElement& g);

QMatrix sigma_invariant(const LoopElement& g, const Factorization& f);

struct FixedClass {
  Coweight lambda;
  int m_plus;
  int m_minus;

  friend bool operator==(const FixedClass& a, const FixedClass& b) {
    return a.lambda == b.lambda && a.m_plus == b.m_plus && a.m_minus == b.m_minus;
  }
};

// Sum and parity constraints of an ordered pair (m_plus, m_minus) for lambda.
bool satisfies_pair_constraints(const FixedClass& c);

FixedClass classify_fixed(const LoopElement& g);

// lambda(z) evaluated at z = -1, i.e. diag((-1)^lambda_s).
QMatrix lambda_at_minus_one(const Coweight& lambda);

}  // namespace grassline
