#include "grassline/linalg.hpp"
#include "grassline/snf.hpp"
#include "grassline/tools/generators.hpp"
#include "support.hpp"

using namespace grassline;
using namespace testing_support;

TEST(Rational, ParsesToCanonicalForm) {
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_ERROR_CODE(parse_rational("6/-4"), ErrorCode::ParseError);
  EXPECT_EQ(format_rational(parse_rational("-0/7")), "0");
  EXPECT_EQ(format_rational(parse_rational("12")), "12");
  EXPECT_ERROR_CODE(parse_rational("  12 "), ErrorCode::ParseError);
  EXPECT_EQ(parse_rational("2/4").get_den(), 2);
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_ERROR_CODE(parse_rational("1/0"), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(parse_rational("abc"), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(parse_rational(""), ErrorCode::ParseError);
}

TEST(Rational, Powers) {
  EXPECT_EQ(rational_pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(rational_pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(rational_pow(Rational(-5), 0), Rational(1));
}

TEST(PolyString, CanonicalFormatting) {
  const Poly1 p = parse_poly<1>("3 - 2*t^-2 + 1*t^3", kVarT);
  EXPECT_EQ(format_poly(p, kVarT), "1*t^3 + 3 - 2*t^-2");
  EXPECT_EQ(format_poly(Poly1(), kVarT), "0");
  EXPECT_EQ(format_poly(parse_poly<1>("t^-1 - t^-1", kVarT), kVarT), "0");
}

TEST(PolyString, LenientInputForms) {
  EXPECT_EQ(parse_poly<1>("t", kVarT), tpow(1));
  EXPECT_EQ(parse_poly<1>("-t^-1", kVarT), tpow(-1, -1));
  EXPECT_EQ(parse_poly<1>("1/2*t^2", kVarT), tpow(2, Rational(1, 2)));
  EXPECT_EQ(parse_poly<2>("-u", kVarsTU), mono2(0, 1, -1));
  EXPECT_EQ(parse_poly<2>("1*t^-1*u^-1", kVarsTU), mono2(-1, -1));
  EXPECT_EQ(parse_poly<2>("s1^-1*s2^2", kVarsS), mono2(-1, 2));
}

TEST(PolyString, RoundTripOnRandomPolynomials) {
  tools::Generator gen(11);
  for (int k = 0; k < 50; ++k) {
    Poly2 p;
    for (int n = 0; n < 5; ++n) p.add_term({gen.integer(-3, 3), gen.integer(-3, 3)}, gen.small_nonzero());
    EXPECT_EQ(parse_poly<2>(format_poly(p, kVarsTU), kVarsTU), p);
  }
}

TEST(PolyString, RejectsUnknownVariable) {
  EXPECT_ERROR_CODE(parse_poly<1>("x^2", kVarT), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(parse_poly<1>("1/0*t", kVarT), ErrorCode::ParseError);
}

TEST(Laurent, ArithmeticTrimsZeros) {
  const Poly1 a = tpow(1) + tpow(-1);
  const Poly1 b = tpow(1) - tpow(-1);
  EXPECT_EQ(a * b, tpow(2) - tpow(-2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).size(), 0u);
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  tools::Generator gen(5);
  for (int k = 0; k < 20; ++k) {
    const LaurentMatrix1 m = gen.monomial_det_matrix(2 + k % 3);
    EXPECT_EQ(determinant(m), leibniz_det(m));
    QMatrix q(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) q(i, j) = gen.integer(-3, 3);
    EXPECT_EQ(determinant(q), leibniz_det(q));
  }
}

TEST(Matrix, AdjugateInverseExamples) {
  EXPECT_EQ(adjugate_inverse(LaurentMatrix1::identity(3)), LaurentMatrix1::identity(3));
  EXPECT_EQ(adjugate_inverse(m1({{"1", "t^-1"}, {"0", "1"}})), m1({{"1", "-t^-1"}, {"0", "1"}}));
  const LaurentMatrix2 g = m2({{"0", "u^-1"}, {"-u", "t"}});
  const LaurentMatrix2 inv = adjugate_inverse(g);
  EXPECT_EQ(inv, m2({{"t", "-u^-1"}, {"u", "0"}}));
  EXPECT_EQ(g * inv, LaurentMatrix2::identity(2));
  EXPECT_ERROR_CODE(adjugate_inverse(m1({{"t", "0"}, {"0", "1"}})), ErrorCode::DeterminantNotOne);
}

TEST(Matrix, AdjugateInverseIsAnInvolution) {
  tools::Generator gen(6);
  for (int k = 0; k < 20; ++k) {
    const LaurentMatrix2 g = gen.elementary_product(3, -2, 2, -2, 2, 4);
    EXPECT_EQ(adjugate_inverse(adjugate_inverse(g)), g);
    EXPECT_EQ(g * adjugate_inverse(g), LaurentMatrix2::identity(3));
  }
}

TEST(SplitNegNonneg, Examples) {
  auto s = split_neg_nonneg(tpow(1) + tpow(-1));
  EXPECT_EQ(s.neg, tpow(-1));
  EXPECT_EQ(s.nonneg, tpow(1));
  s = split_neg_nonneg(Poly1());
  EXPECT_TRUE(s.neg.is_zero() && s.nonneg.is_zero());
  s = split_neg_nonneg(parse_poly<1>("3 - 2*t^-2 + t^3", kVarT));
  EXPECT_EQ(s.neg, tpow(-2, -2));
  EXPECT_EQ(s.nonneg, Poly1(3) + tpow(3));
}

TEST(SplitNegNonneg, PartsSumBack) {
  tools::Generator gen(7);
  for (int k = 0; k < 50; ++k) {
    Poly1 p;
    for (int n = 0; n < 6; ++n) p.add_term({gen.integer(-4, 4)}, gen.small_nonzero());
    const auto s = split_neg_nonneg(p);
    EXPECT_EQ(s.neg + s.nonneg, p);
    EXPECT_TRUE(s.neg.is_zero() || s.neg.max_exponent(0) < 0);
    EXPECT_TRUE(s.nonneg.is_zero() || s.nonneg.min_exponent(0) >= 0);
  }
}

TEST(Linalg, RankNullspaceAndSolve) {
  const QMatrix a = qm({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(a), 2u);
  const QMatrix n = nullspace(a);
  EXPECT_EQ(n.cols(), 1u);
  EXPECT_TRUE((a * n).is_zero());
  const QMatrix b = qm({{6}, {12}, {2}});
  const auto x = solve(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, b);
  EXPECT_FALSE(solve(a, qm({{1}, {0}, {0}})).has_value());
  EXPECT_ERROR_CODE(inverse(a), ErrorCode::SingularMatrix);
}

TEST(Linalg, RankNullityOnRandomMatrices) {
  tools::Generator gen(8);
  for (int k = 0; k < 30; ++k) {
    QMatrix a(3 + k % 3, 4);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = gen.integer(-1, 1);
    const QMatrix n = nullspace(a);
    EXPECT_EQ(rank(a) + n.cols(), a.cols());
    EXPECT_TRUE((a * n).is_zero());
    EXPECT_EQ(column_basis(a).cols(), rank(a));
  }
  const QMatrix u = gen.unimodular(4, 6);
  EXPECT_EQ(u * inverse(u), QMatrix::identity(4));
}

TEST(Snf, DiagonalInputIsUntouched) {
  const SnfResult s = smith_normal_form(m1({{"t", "0"}, {"0", "t"}}));
  EXPECT_EQ(s.exponents, (std::vector<int>{1, 1}));
  EXPECT_EQ(s.left, LaurentMatrix1::identity(2));
  EXPECT_EQ(s.right, LaurentMatrix1::identity(2));
}

TEST(Snf, UnimodularInput) {
  const LaurentMatrix1 m = m1({{"1", "t"}, {"0", "1"}});
  const SnfResult s = smith_normal_form(m);
  EXPECT_EQ(s.exponents, (std::vector<int>{0, 0}));
  EXPECT_EQ(s.left * tpow_diag(s.exponents) * s.right, m);
}

TEST(Snf, TriangularInput) {
  const LaurentMatrix1 m = m1({{"t", "1"}, {"0", "t"}});
  const SnfResult s = smith_normal_form(m);
  EXPECT_EQ(s.exponents, (std::vector<int>{0, 2}));
  EXPECT_EQ(s.left * tpow_diag(s.exponents) * s.right, m);
  EXPECT_EQ(determinant(s.left), Poly1(1));
}

TEST(Snf, Errors) {
  EXPECT_ERROR_CODE(smith_normal_form(m1({{"1 + t", "0"}, {"0", "1"}})), ErrorCode::NonMonomialDeterminant);
  EXPECT_ERROR_CODE(smith_normal_form(m1({{"t", "t"}, {"1", "1"}})), ErrorCode::SingularMatrix);
  EXPECT_ERROR_CODE(smith_normal_form(m1({{"t^-1", "0"}, {"0", "t"}})), ErrorCode::NotPolynomial);
}

// Product of elementary matrices E_ij(c t^a), a >= 0: unimodular over Q[t].
LaurentMatrix1 unimodular_poly(tools::Generator& gen, std::size_t r) {
  LaurentMatrix1 m = LaurentMatrix1::identity(r);
  for (int k = 0; k < 4; ++k) {
    const auto i = static_cast<std::size_t>(gen.integer(0, static_cast<int>(r) - 1));
    const auto j = (i + 1 + static_cast<std::size_t>(gen.integer(0, static_cast<int>(r) - 2))) % r;
    LaurentMatrix1 e = LaurentMatrix1::identity(r);
    e(i, j) = tpow(gen.integer(0, 2), gen.small_nonzero());
    m = m * e;
  }
  return m;
}

TEST(Snf, ExponentsInvariantUnderUnimodularMultiplication) {
  tools::Generator gen(9);
  for (int k = 0; k < 20; ++k) {
    const std::size_t r = 2 + k % 2;
    const LaurentMatrix1 m = gen.monomial_det_matrix(r);
    const LaurentMatrix1 moved = unimodular_poly(gen, r) * m * unimodular_poly(gen, r);
    const SnfResult a = smith_normal_form(m);
    const SnfResult b = smith_normal_form(moved);
    EXPECT_EQ(a.exponents, b.exponents);
    EXPECT_EQ(b.left * tpow_diag(b.exponents) * b.right, moved);
  }
}
