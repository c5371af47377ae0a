#include "grassline/sl2lab.hpp"

#include "grassline/polystring.hpp"

namespace grassline {

VerifyReport sl2_membership(const LoopElement& g, int m, bool iota_fixed) {
  VerifyReport rep;
  if (g.rank() != 2) {
    rep.add("rank", false, "rank " + std::to_string(g.rank()));
    return rep;
  }
  rep.add("rank", true);
  const int deg = g.degree();
  rep.add("degree", deg <= m, "degree " + std::to_string(deg));
  const bool det_one = determinant(g.matrix()) == Poly1(1);
  rep.add("det", det_one);
  const bool top = m == 0 || (m > 0 && !g.coefficient(m).is_zero());
  rep.add("x_m_nonzero", top, top ? std::nullopt : std::optional<std::string>("x_" + std::to_string(m) + " = 0"));
  if (iota_fixed) {
    const LaurentMatrix1 prod = g.matrix() * g.rescaled(-1).matrix();
    const bool fixed = prod == LaurentMatrix1::identity(2);
    rep.add("iota_fixed", fixed, fixed ? std::nullopt : std::optional<std::string>(format_matrix(prod, kVarT)));
  }
  for (auto& c : rep.checks)
    if (c.pass && c.name != "iota_fixed") c.witness.reset();
  return rep;
}

Partition jordan_type(const QMatrix& x) { return nilpotent_jordan_type(x); }

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

Sl2TripleData sl2_triple(const Partition& mu) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] <= 0 || (k > 0 && mu[k] > mu[k - 1]))
      throw Error(ErrorCode::DimensionMismatch, "partition parts must be positive and nonincreasing");
    n += static_cast<std::size_t>(mu[k]);
  }
  Sl2TripleData t{QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
  std::size_t off = 0;
  for (int k : mu) {
    for (int i = 0; i < k; ++i) {
      t.h(off + i, off + i) = k - 1 - 2 * i;
      if (i + 1 < k) {
        t.e(off + i, off + i + 1) = 1;
        t.f(off + i + 1, off + i) = (i + 1) * (k - i - 1);
      }
    }
    off += static_cast<std::size_t>(k);
  }
  if (commutator(t.e, t.f) != t.h || commutator(t.h, t.e) != Rational(2) * t.e ||
      commutator(t.h, t.f) != Rational(-2) * t.f)
    throw Error(ErrorCode::BracketViolation, "standard triple fails the sl(2) relations");
  return t;
}

bool slodowy_member(const QMatrix& x, const Sl2TripleData& triple) {
  if (x.rows() != triple.f.rows() || x.cols() != triple.f.cols())
    throw Error(ErrorCode::DimensionMismatch, "slice test needs matching sizes");
  return commutator(triple.f, x - triple.e).is_zero();
}

bool in_symplectic(const QMatrix& x, const QMatrix& j) {
  if (x.rows() != j.rows() || x.cols() != j.cols() || !x.is_square())
    throw Error(ErrorCode::DimensionMismatch, "form and matrix sizes differ");
  return (x.transpose() * j + j * x).is_zero();
}

TypeDSl2 typeD_dims_sl2(int m) {
  if (m <= 0) throw Error(ErrorCode::InvalidCoweight, "m must be positive");
  if (m % 2 == 0) throw Error(ErrorCode::EvenM, "the iota-fixed stratum is empty for even m");
  TypeDSl2 out;
  out.dims.v0_plus = (m + 1) / 2;
  out.dims.v0_minus = (m - 1) / 2;
  for (int k = 1; k < m; ++k) out.dims.v[k] = m - k;
  out.framing = framing_D(2);
  out.expected_dim = m + 1;
  return out;
}

}  // namespace grassline
