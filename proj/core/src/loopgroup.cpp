#include "grassline/loopgroup.hpp"

#include <algorithm>
#include <numeric>

#include "grassline/linalg.hpp"
#include "grassline/snf.hpp"

namespace grassline {

Coweight::Coweight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::InvalidCoweight, "coweight of rank 0");
  long sum = 0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    sum += entries_[k];
    if (k > 0 && entries_[k] > entries_[k - 1]) throw Error(ErrorCode::InvalidCoweight, "entries not weakly decreasing");
  }
  if (sum != 0) throw Error(ErrorCode::InvalidCoweight, "entries do not sum to zero");
}

bool Coweight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

bool coweight_leq(const Coweight& mu, const Coweight& lambda) {
  if (mu.rank() != lambda.rank()) throw Error(ErrorCode::RankMismatch, "coweights of different rank");
  long partial = 0;
  for (std::size_t k = 0; k < mu.rank(); ++k) {
    partial += lambda[k] - mu[k];
    if (partial < 0) return false;
  }
  return true;
}

Coweight coweight_neg_w0(const Coweight& lambda) {
  std::vector<int> out(lambda.entries().rbegin(), lambda.entries().rend());
  for (int& x : out) x = -x;
  return Coweight(out);
}

bool is_symmetric(const Coweight& lambda) { return coweight_neg_w0(lambda) == lambda; }

bool is_small(const Coweight& lambda) {
  const std::size_t r = lambda.rank();
  if (r < 2) return true;
  std::vector<int> two_theta(r, 0);
  two_theta.front() = 2;
  two_theta.back() = -2;
  return !coweight_leq(Coweight(two_theta), lambda);
}

std::map<int, int> multiplicities(const Coweight& lambda) {
  std::map<int, int> m;
  for (int x : lambda.entries()) ++m[x];
  return m;
}

int multiplicity(const Coweight& lambda, int i) {
  return static_cast<int>(std::count(lambda.entries().begin(), lambda.entries().end(), i));
}

namespace {

QMatrix power(const QMatrix& x, int k) {
  QMatrix out = QMatrix::identity(x.rows());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

}  // namespace

bool is_nilpotent(const QMatrix& x) {
  if (!x.is_square()) throw Error(ErrorCode::DimensionMismatch, "nilpotency of a non-square matrix");
  return power(x, static_cast<int>(x.rows())).is_zero();
}

std::vector<int> nilpotent_jordan_type(const QMatrix& x) {
  if (!is_nilpotent(x)) throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
  const int n = static_cast<int>(x.rows());
  // ranks[k] = rank(x^k); blocks of size >= k number ranks[k-1] - ranks[k].
  std::vector<int> ranks{n};
  QMatrix p = QMatrix::identity(x.rows());
  while (ranks.back() > 0) {
    p = p * x;
    ranks.push_back(static_cast<int>(rank(p)));
  }
  ranks.push_back(0);
  std::vector<int> parts;
  for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
    const int at_least_k = ranks[k - 1] - ranks[k];
    const int at_least_k1 = ranks[k] - ranks[k + 1];
    for (int c = 0; c < at_least_k - at_least_k1; ++c) parts.push_back(static_cast<int>(k));
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

Coweight lambda_of_nilpotent(const QMatrix& x) {
  std::vector<int> out;
  for (int b : nilpotent_jordan_type(x))
    for (int w = b - 1; w >= 1 - b; w -= 2) out.push_back(w);
  std::sort(out.rbegin(), out.rend());
  return Coweight(out);
}

LoopElement::LoopElement(LaurentMatrix1 body) : body_(std::move(body)) {
  if (!body_.is_square() || body_.rows() == 0) throw Error(ErrorCode::NotLoopElement, "loop element must be square");
  if (max_exponent(body_) > 0) throw Error(ErrorCode::NotLoopElement, "positive power of t present");
  if (coefficient(0) != QMatrix::identity(body_.rows()))
    throw Error(ErrorCode::NotLoopElement, "constant term is not the identity");
  if (determinant(body_) != Poly1(1)) throw Error(ErrorCode::NotLoopElement, "determinant is not 1");
}

LoopElement LoopElement::identity(std::size_t r) { return LoopElement(LaurentMatrix1::identity(r), Unchecked{}); }

int LoopElement::degree() const { return -min_exponent(body_); }

QMatrix LoopElement::coefficient(int k) const { return grassline::coefficient(body_, -k); }

LoopElement LoopElement::inverse() const { return LoopElement(adjugate(body_), Unchecked{}); }

LoopElement LoopElement::rescaled(const Rational& c) const {
  if (is_zero(c)) throw Error(ErrorCode::ZeroScalar, "rescaling by zero");
  return LoopElement(scale_variables<1>(body_, {1 / c}), Unchecked{});
}

LoopElement LoopElement::conjugated(const QMatrix& h) const {
  const LaurentMatrix1 hl = to_laurent<1>(h);
  const LaurentMatrix1 hinv = to_laurent<1>(grassline::inverse(h));
  return LoopElement(hl * body_ * hinv, Unchecked{});
}

LoopElement operator*(const LoopElement& a, const LoopElement& b) {
  return LoopElement(a.body_ * b.body_, LoopElement::Unchecked{});
}

LoopElement iota(const LoopElement& g) { return g.rescaled(-1).inverse(); }

QMatrix pi(const LoopElement& g) { return g.coefficient(1); }

LoopElement exp_embed(const QMatrix& x) {
  if (!x.is_square() || x.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "exp_embed needs a square matrix");
  if (!is_nilpotent(x)) throw Error(ErrorCode::NotNilpotent, "exp_embed needs a nilpotent matrix");
  const std::size_t r = x.rows();
  LaurentMatrix1 body = LaurentMatrix1::identity(r);
  QMatrix term = QMatrix::identity(r);
  for (int k = 1; k < static_cast<int>(r); ++k) {
    term = term * x;
    if (term.is_zero()) break;
    term = Rational(1, k) * term;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) body(i, j) += tpow(-k, term(i, j));
  }
  return LoopElement(body);
}

Factorization::Factorization(LaurentMatrix1 q1, Coweight lambda, LaurentMatrix1 q2, const LoopElement& source)
    : q1_(std::move(q1)), lambda_(std::move(lambda)), q2_(std::move(q2)), source_(source) {
  const std::size_t r = source_.rank();
  if (q1_.rows() != r || q2_.rows() != r || lambda_.rank() != r || !q1_.is_square() || !q2_.is_square())
    throw Error(ErrorCode::DimensionMismatch, "factorization sizes disagree");
  if (!is_polynomial(q1_) || !is_polynomial(q2_)) throw Error(ErrorCode::NotPolynomial, "q1 and q2 must be polynomial in t");
  if (determinant(q1_) != Poly1(1) || determinant(q2_) != Poly1(1))
    throw Error(ErrorCode::DeterminantNotOne, "q1 and q2 must have determinant 1");
  if (q1_ * tpow_diag(lambda_.entries()) * q2_ != source_.matrix())
    throw Error(ErrorCode::InternalInconsistency, "q1 t^lambda q2 does not reproduce the loop element");
}

Factorization factorize(const LoopElement& g) {
  const std::size_t r = g.rank();
  const int d = g.degree();
  const SnfResult snf = smith_normal_form(evaluate_shift(g.matrix(), d));
  // stable sort into decreasing order keeps already-dominant input untouched
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return snf.exponents[a] > snf.exponents[b]; });
  std::vector<int> lambda(r);
  LaurentMatrix1 q1(r, r), q2(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    lambda[k] = snf.exponents[order[k]] - d;
    for (std::size_t s = 0; s < r; ++s) {
      q1(s, k) = snf.left(s, order[k]);
      q2(k, s) = snf.right(order[k], s);
    }
  }
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      if (order[a] > order[b]) ++inversions;
  if (inversions % 2 == 1) {
    // odd permutation; flip a sign on both sides, which commutes with t^lambda.
    for (std::size_t s = 0; s < r; ++s) {
      q1(s, 0) = -q1(s, 0);
      q2(0, s) = -q2(0, s);
    }
  }
  try {
    return Factorization(std::move(q1), Coweight(lambda), std::move(q2), g);
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalInconsistency, std::string("factorization failed: ") + e.what());
  }
}

Coweight stratum(const LoopElement& g) { return factorize(g).lambda(); }

QMatrix lambda_at_minus_one(const Coweight& lambda) {
  QMatrix out(lambda.rank(), lambda.rank());
  for (std::size_t k = 0; k < lambda.rank(); ++k) out(k, k) = (lambda[k] % 2 == 0) ? 1 : -1;
  return out;
}

QMatrix sigma_invariant(const LoopElement& g, const Factorization& f) {
  if (iota(g) != g) throw Error(ErrorCode::NotIotaFixed, "sigma_invariant needs an iota-fixed element");
  if (f.source() != g) throw Error(ErrorCode::InternalInconsistency, "factorization belongs to another element");
  const std::size_t r = g.rank();
  const Coweight& lambda = f.lambda();
  const QMatrix p = constant_part(f.q2()) * constant_part(f.q1());
  QMatrix sigma(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const int w = lambda[i] + lambda[j];
      if (w < 0 && !is_zero(p(i, j)))
        throw Error(ErrorCode::IllDefinedLimit, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                    ") of weight " + std::to_string(w) + " is nonzero");
      if (w == 0) sigma(i, j) = p(i, j);
    }
  if (sigma * sigma != lambda_at_minus_one(lambda))
    throw Error(ErrorCode::InternalInconsistency, "sigma^2 differs from lambda(-1)");
  return sigma;
}

bool satisfies_pair_constraints(const FixedClass& c) {
  if (c.m_plus < 0 || c.m_minus < 0) return false;
  if (c.m_plus + c.m_minus != multiplicity(c.lambda, 0)) return false;
  int even_sum = 0;
  for (const auto& [i, m] : multiplicities(c.lambda))
    if (i > 0 && i % 2 == 0) even_sum += m;
  return (c.m_minus - even_sum) % 2 == 0;
}

FixedClass classify_fixed(const LoopElement& g) {
  if (iota(g) != g) throw Error(ErrorCode::NotIotaFixed, "classify_fixed needs an iota-fixed element");
  const Factorization f = factorize(g);
  const QMatrix sigma = sigma_invariant(g, f);
  std::vector<std::size_t> zero_block;
  for (std::size_t k = 0; k < g.rank(); ++k)
    if (f.lambda()[k] == 0) zero_block.push_back(k);
  const std::size_t z = zero_block.size();
  QMatrix s0(z, z);
  for (std::size_t a = 0; a < z; ++a)
    for (std::size_t b = 0; b < z; ++b) s0(a, b) = sigma(zero_block[a], zero_block[b]);
  const QMatrix id = QMatrix::identity(z);
  const int plus = static_cast<int>(z - rank(s0 - id));
  const int minus = static_cast<int>(z - rank(s0 + id));
  if (plus + minus != static_cast<int>(z)) throw Error(ErrorCode::InternalInconsistency, "sigma is not an involution on the weight-0 block");
  return {f.lambda(), plus, minus};
}

}  // namespace grassline
