#include "grassline/transitions.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "grassline/polystring.hpp"

namespace grassline {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerifyReport::add(std::string name, bool pass, std::optional<std::string> witness) {
  checks.push_back({std::move(name), pass, std::move(witness)});
}

void VerifyReport::append(const VerifyReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
}

GaugeElement GaugeElement::identity(std::size_t r) {
  const auto id = LaurentMatrix2::identity(r);
  return {id, id, id, id};
}

namespace {

using ExpPred = std::function<bool(int, int)>;

std::string monomial_witness(std::size_t i, std::size_t j, const Poly2::Exponent& e, const VarNames<2>& vars) {
  return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") has " + vars[0] + "^" + std::to_string(e[0]) +
         "*" + vars[1] + "^" + std::to_string(e[1]);
}

std::optional<std::string> cone_violation(const LaurentMatrix2& m, const ExpPred& allowed, const VarNames<2>& vars) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [e, c] : m(i, j).terms())
        if (!allowed(e[0], e[1])) return monomial_witness(i, j, e, vars);
  return std::nullopt;
}

// The part of m supported on exponents selected by `on` must be the identity.
std::optional<std::string> slice_violation(const LaurentMatrix2& m, const ExpPred& on, const VarNames<2>& vars) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly2 part = m(i, j).filter([&](const Poly2::Exponent& e) { return on(e[0], e[1]); });
      if (part != Poly2(i == j ? 1 : 0))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") slice is " + format_poly(part, vars);
    }
  return std::nullopt;
}

void check_cone(VerifyReport& rep, const std::string& name, const LaurentMatrix2& m, const ExpPred& allowed,
                const VarNames<2>& vars) {
  auto w = cone_violation(m, allowed, vars);
  rep.add(name, !w, w);
}

void check_slice(VerifyReport& rep, const std::string& name, const LaurentMatrix2& m, const ExpPred& on,
                 const VarNames<2>& vars) {
  auto w = slice_violation(m, on, vars);
  rep.add(name, !w, w);
}

void check_det(VerifyReport& rep, const std::string& name, const LaurentMatrix2& m, const VarNames<2>& vars) {
  if (!m.is_square()) {
    rep.add(name, false, "not square");
    return;
  }
  const Poly2 d = determinant(m);
  if (d == Poly2(1)) rep.add(name, true);
  else rep.add(name, false, "det = " + format_poly(d, vars));
}

void check_equal(VerifyReport& rep, const std::string& name, const LaurentMatrix2& lhs, const LaurentMatrix2& rhs,
                 const VarNames<2>& vars) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rep.add(name, false, "shape mismatch");
    return;
  }
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) {
        rep.add(name, false,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs by " +
                    format_poly(lhs(i, j) - rhs(i, j), vars));
        return;
      }
  rep.add(name, true);
}

// Right multiplication by diag(x^{e_j}) in variable k.
LaurentMatrix2 scale_columns(LaurentMatrix2 m, const std::vector<int>& e, std::size_t k) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Poly2::Exponent d{0, 0};
    d[k] = e[j];
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = m(i, j).shifted(d);
  }
  return m;
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (int& x : out) x = -x;
  return out;
}

// Coefficient of u^{-k} as a matrix over Q[t, t^-1].
LaurentMatrix1 u_coefficient(const LaurentMatrix2& g, int k) {
  return g.map([k](const Poly2& p) {
    Poly1 out;
    for (const auto& [e, c] : p.terms())
      if (e[1] == -k) out.add_term({e[0]}, c);
    return out;
  });
}

LaurentMatrix2 with_u_power(const LaurentMatrix1& a, int k) {
  return a.map([k](const Poly1& p) {
    return p.map_terms<2>([k](const Poly1::Exponent& e, const Rational& c) {
      return std::make_pair(Poly2::Exponent{e[0], -k}, c);
    });
  });
}

}  // namespace

LaurentMatrix2 diagonal_substitution(const LaurentMatrix1& gamma) {
  return gamma.map([](const Poly1& p) {
    return p.map_terms<2>([](const Poly1::Exponent& e, const Rational& c) {
      return std::make_pair(Poly2::Exponent{e[0], e[0]}, c);
    });
  });
}

LaurentMatrix2 swap_variables(const LaurentMatrix2& m) {
  return m.map([](const Poly2& p) {
    return p.map_terms<2>([](const Poly2::Exponent& e, const Rational& c) {
      return std::make_pair(Poly2::Exponent{e[1], e[0]}, c);
    });
  });
}

TransitionQuad build_quad(const Factorization& f) {
  const std::vector<int>& lambda = f.lambda().entries();
  const std::size_t r = lambda.size();
  TransitionQuad q{scale_columns(diagonal_substitution(f.q1()), lambda, 1),
                   scale_columns(diagonal_substitution(adjugate(f.q2())), negated(lambda), 0),
                   LaurentMatrix2::identity(r), diagonal_substitution(f.source().matrix())};
  if (!verify_quad(q).ok()) throw Error(ErrorCode::InternalInconsistency, "build_quad produced an invalid quadruple");
  return q;
}

VerifyReport verify_quad(const TransitionQuad& q) {
  VerifyReport rep;
  const auto& v = kVarsTU;
  check_cone(rep, "g01_00.cone", q.g01_00, [](int t, int) { return t >= 0; }, v);
  check_cone(rep, "g10_00.cone", q.g10_00, [](int, int u) { return u >= 0; }, v);
  check_cone(rep, "g11_01.cone", q.g11_01, [](int, int u) { return u <= 0; }, v);
  check_slice(rep, "g11_01.u0_slice", q.g11_01, [](int, int u) { return u == 0; }, v);
  check_cone(rep, "g11_10.cone", q.g11_10, [](int t, int) { return t <= 0; }, v);
  check_slice(rep, "g11_10.t0_slice", q.g11_10, [](int t, int) { return t == 0; }, v);
  check_det(rep, "g01_00.det", q.g01_00, v);
  check_det(rep, "g10_00.det", q.g10_00, v);
  check_det(rep, "g11_01.det", q.g11_01, v);
  check_det(rep, "g11_10.det", q.g11_10, v);
  check_equal(rep, "cocycle", q.g11_01 * q.g01_00, q.g11_10 * q.g10_00, v);
  return rep;
}

VerifyReport verify_gauge(const GaugeElement& h) {
  VerifyReport rep;
  const auto& v = kVarsTU;
  check_cone(rep, "h00.cone", h.h00, [](int t, int u) { return t >= 0 && u >= 0; }, v);
  check_cone(rep, "h01.cone", h.h01, [](int t, int u) { return t >= 0 && u <= 0; }, v);
  check_slice(rep, "h01.u0_slice", h.h01, [](int, int u) { return u == 0; }, v);
  check_cone(rep, "h10.cone", h.h10, [](int t, int u) { return u >= 0 && t <= 0; }, v);
  check_slice(rep, "h10.t0_slice", h.h10, [](int t, int) { return t == 0; }, v);
  check_cone(rep, "h11.cone", h.h11, [](int t, int u) { return t <= 0 && u <= 0; }, v);
  check_slice(rep, "h11.t0_slice", h.h11, [](int t, int) { return t == 0; }, v);
  check_slice(rep, "h11.u0_slice", h.h11, [](int, int u) { return u == 0; }, v);
  check_det(rep, "h00.det", h.h00, v);
  check_det(rep, "h01.det", h.h01, v);
  check_det(rep, "h10.det", h.h10, v);
  check_det(rep, "h11.det", h.h11, v);
  return rep;
}

TransitionQuad act_gauge(const TransitionQuad& q, const GaugeElement& h) {
  const VerifyReport rep = verify_gauge(h);
  for (const auto& c : rep.checks)
    if (!c.pass) throw Error(ErrorCode::ConeViolation, c.name + ": " + c.witness.value_or("failed"));
  const LaurentMatrix2 h00inv = adjugate(h.h00);
  const LaurentMatrix2 h01inv = adjugate(h.h01);
  const LaurentMatrix2 h10inv = adjugate(h.h10);
  return {h.h01 * q.g01_00 * h00inv, h.h10 * q.g10_00 * h00inv, h.h11 * q.g11_01 * h01inv,
          h.h11 * q.g11_10 * h10inv};
}

TransitionQuad act_torus(const TransitionQuad& q, const Rational& alpha, const Rational& beta) {
  if (is_zero(alpha) || is_zero(beta)) throw Error(ErrorCode::ZeroScalar, "torus parameters must be nonzero");
  const std::array<Rational, 2> s{1 / alpha, 1 / beta};
  return {scale_variables<2>(q.g01_00, s), scale_variables<2>(q.g10_00, s), scale_variables<2>(q.g11_01, s),
          scale_variables<2>(q.g11_10, s)};
}

TransitionQuad act_swap(const TransitionQuad& q) {
  return {swap_variables(q.g10_00), swap_variables(q.g01_00), swap_variables(q.g11_10), swap_variables(q.g11_01)};
}

TransitionQuad act_G(const TransitionQuad& q, const QMatrix& g) {
  const Rational d = determinant(g);
  if (d != 1) throw Error(ErrorCode::DeterminantNotOne, "act_G needs g in SL(r)");
  const LaurentMatrix2 gl = to_laurent<2>(g);
  const LaurentMatrix2 ginv = adjugate(gl);
  return {gl * q.g01_00, gl * q.g10_00, gl * q.g11_01 * ginv, gl * q.g11_10 * ginv};
}

TransitionQuad act_weyl(const TransitionQuad& q) { return act_torus(act_swap(q), -1, 1); }

BirkhoffSplit birkhoff_split_u(const LaurentMatrix2& g, const SplitOptions& opts) {
  if (!g.is_square()) throw Error(ErrorCode::DimensionMismatch, "birkhoff_split_u needs a square matrix");
  if (auto w = cone_violation(g, [](int, int u) { return u <= 0; }, kVarsTU))
    throw Error(ErrorCode::ConeViolation, "positive power of u: " + *w);
  if (auto w = slice_violation(g, [](int, int u) { return u == 0; }, kVarsTU))
    throw Error(ErrorCode::ConeViolation, "u^0 slice is not the identity: " + *w);

  const std::size_t r = g.rows();
  int deg_u = 0, tmin = std::numeric_limits<int>::max(), tmax = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (const auto& [e, c] : g(i, j).terms()) {
        deg_u = std::max(deg_u, -e[1]);
        tmin = std::min(tmin, e[0]);
        tmax = std::max(tmax, e[0]);
      }
  const int span = deg_u == 0 ? 0 : tmax - tmin;
  const int bound = opts.max_orders.value_or(std::max(deg_u, deg_u * (span + 1)));

  std::vector<LaurentMatrix1> a{LaurentMatrix1::identity(r)}, b{LaurentMatrix1::identity(r)};
  LaurentMatrix2 left = LaurentMatrix2::identity(r), right = LaurentMatrix2::identity(r);
  for (int k = 1;; ++k) {
    if (left * right == g) return {left, right};
    if (k > bound)
      throw Error(ErrorCode::NonTerminatingFactorization,
                  "split did not close after " + std::to_string(bound) + " orders in u^-1");
    LaurentMatrix1 rhs = u_coefficient(g, k);
    for (int i = 1; i < k; ++i) rhs -= a[i] * b[k - i];
    LaurentMatrix1 ak(r, r), bk(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        PolySplit s = split_neg_nonneg(rhs(i, j));
        ak(i, j) = std::move(s.neg);
        bk(i, j) = std::move(s.nonneg);
      }
    left += with_u_power(ak, k);
    right += with_u_power(bk, k);
    a.push_back(std::move(ak));
    b.push_back(std::move(bk));
  }
}

LoopElement extract_quad(const TransitionQuad& q, const SplitOptions& opts) {
  const LaurentMatrix2 a = birkhoff_split_u(q.g11_01, opts).left;
  const LaurentMatrix2 b = swap_variables(birkhoff_split_u(swap_variables(q.g11_10), opts).left);
  const LaurentMatrix2 g = adjugate_inverse(a) * b;
  LaurentMatrix1 gamma(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      for (const auto& [e, c] : g(i, j).terms()) {
        if (e[0] != e[1])
          throw Error(ErrorCode::NotDiagonalSubstitution, monomial_witness(i, j, e, kVarsTU));
        gamma(i, j).add_term({e[0]}, c);
      }
  return LoopElement(gamma);
}

TransitionTriple build_triple(const Factorization& f) {
  const std::vector<int>& lambda = f.lambda().entries();
  TransitionTriple tr{scale_columns(diagonal_substitution(adjugate(f.q2())), negated(lambda), 0),
                      scale_columns(diagonal_substitution(f.q1()), lambda, 1),
                      diagonal_substitution(f.source().matrix())};
  if (!verify_triple(tr).ok()) throw Error(ErrorCode::InternalInconsistency, "build_triple produced an invalid triple");
  return tr;
}

VerifyReport verify_triple(const TransitionTriple& tr) {
  VerifyReport rep;
  const auto& v = kVarsS;
  check_cone(rep, "g1_0.cone", tr.g1_0, [](int, int q) { return q >= 0; }, v);
  check_cone(rep, "g2_0.cone", tr.g2_0, [](int p, int) { return p >= 0; }, v);
  check_cone(rep, "g2_1.cone", tr.g2_1, [](int p, int q) { return p + q <= 0; }, v);
  check_slice(rep, "g2_1.diagonal_slice", tr.g2_1, [](int p, int q) { return p + q == 0; }, v);
  check_det(rep, "g1_0.det", tr.g1_0, v);
  check_det(rep, "g2_0.det", tr.g2_0, v);
  check_det(rep, "g2_1.det", tr.g2_1, v);
  check_equal(rep, "relation", tr.g2_0, tr.g2_1 * tr.g1_0, v);
  return rep;
}

LoopElement extract_triple(const TransitionTriple& tr) {
  const LaurentMatrix2& g = tr.g2_1;
  LaurentMatrix1 gamma(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      for (const auto& [e, c] : g(i, j).terms()) {
        if (e[0] != e[1])
          throw Error(ErrorCode::NotNormalizedRepresentative, monomial_witness(i, j, e, kVarsS));
        gamma(i, j).add_term({e[0]}, c);
      }
  return LoopElement(gamma);
}

}  // namespace grassline
