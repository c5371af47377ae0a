#include "grassline/adhm.hpp"
#include "grassline/linalg.hpp"
#include "grassline/tools/generators.hpp"
#include "support.hpp"

using namespace grassline;
using namespace testing_support;

namespace {

// r = 2, V = V_0 of dimension 1, i = (1,0), j = (0,1)^T
AdhmDatumA delta0_datum() {
  AdhmDatumA d = AdhmDatumA::zero(2, DimVectorA(std::map<int, int>{{0, 1}}));
  d.i_map = qm({{1, 0}});
  d.j_map = qm({{0}, {1}});
  return d;
}

AdhmDatumD delta0_datum_d() {
  DimVectorD v;
  v.v0_plus = 1;
  AdhmDatumD d = AdhmDatumD::zero(2, v);
  d.i_map = qm({{1, 0}});
  d.j_map = qm({{0}, {1}});
  return d;
}

bool same_maps(const AdhmQuad& a, const AdhmQuad& b) {
  return a.b1 == b.b1 && a.b2 == b.b2 && a.i == b.i && a.j == b.j;
}

long sum_of_squares_half(const Coweight& l) {
  long s = 0;
  for (int x : l.entries()) s += x * x;
  return s / 2;
}

long positive_root_pairing(const Coweight& l) {
  long s = 0;
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = i + 1; j < l.rank(); ++j) s += l[i] - l[j];
  return s;
}

}  // namespace

TEST(Combinatorics, VFromLambda) {
  EXPECT_EQ(v_from_lambda(Coweight({3, 0, 0, -3})),
            DimVectorA(std::map<int, int>{{-2, 1}, {-1, 2}, {0, 3}, {1, 2}, {2, 1}}));
  EXPECT_TRUE(v_from_lambda(Coweight::zero(4)).is_zero());
  EXPECT_EQ(v_from_lambda(Coweight({2, 0, -2})), DimVectorA(std::map<int, int>{{-1, 1}, {0, 2}, {1, 1}}));
}

TEST(Combinatorics, LambdaFromV) {
  EXPECT_EQ(lambda_from_v(v_from_lambda(Coweight({3, 0, 0, -3})), 4), Coweight({3, 0, 0, -3}));
  EXPECT_EQ(lambda_from_v(DimVectorA(), 5), Coweight::zero(5));
  EXPECT_EQ(lambda_from_v(DimVectorA(std::map<int, int>{{0, 1}}), 2), Coweight({1, -1}));
  EXPECT_ERROR_CODE(lambda_from_v(DimVectorA(std::map<int, int>{{0, 2}}), 1), ErrorCode::NegativeMultiplicity);
}

TEST(Combinatorics, RoundTripAndChernNumber) {
  for (std::size_t r = 1; r <= 5; ++r)
    for (const Coweight& l : tools::dominant_coweights(r, 3)) {
      const DimVectorA v = v_from_lambda(l);
      EXPECT_EQ(lambda_from_v(v, static_cast<int>(r)), l);
      EXPECT_EQ(chern_number(v), sum_of_squares_half(l));
      const auto tau = tau_multiplicities(v, static_cast<int>(r));
      ASSERT_TRUE(tau.has_value());
      EXPECT_EQ(*tau, multiplicities(l));
      EXPECT_EQ(quiver_dim(v, framing_A(static_cast<int>(r))), positive_root_pairing(l));
    }
  EXPECT_EQ(chern_number(v_from_lambda(Coweight({3, 0, 0, -3}))), 9);
  EXPECT_EQ(chern_number(v_from_lambda(Coweight({1, 1, -1, -1}))), 2);
}

TEST(Combinatorics, XiEnumerate) {
  const Coweight l({3, 0, 0, -3});
  EXPECT_EQ(xi_enumerate(l), (std::vector<XiClass>{{l, 2, 0}, {l, 0, 2}}));
  for (int m = 2; m <= 10; m += 2) EXPECT_TRUE(xi_enumerate(Coweight({m, -m})).empty());
  EXPECT_EQ(xi_enumerate(Coweight::zero(3)),
            (std::vector<XiClass>{{Coweight::zero(3), 3, 0}, {Coweight::zero(3), 1, 2}}));
  EXPECT_TRUE(xi_enumerate(Coweight({2, -1, -1})).empty());
}

TEST(Combinatorics, VDFromXi) {
  const Coweight l({3, 0, 0, -3});
  EXPECT_EQ(vD_from_xi({l, 2, 0}), (DimVectorD{2, 1, {{1, 2}, {2, 1}}}));
  EXPECT_EQ(vD_from_xi({l, 0, 2}), (DimVectorD{3, 0, {{1, 2}, {2, 1}}}));
  EXPECT_EQ(vD_from_xi({Coweight({5, -5}), 0, 0}), (DimVectorD{3, 2, {{1, 4}, {2, 3}, {3, 2}, {4, 1}}}));
  // m_minus > v_1 has no datum
  EXPECT_FALSE(vD_from_xi({Coweight::zero(3), 1, 2}).has_value());
  EXPECT_ERROR_CODE(vD_from_xi({l, 1, 1}), ErrorCode::IntegralityViolation);
}

TEST(Combinatorics, TauMultiplicities) {
  const auto d = tau_multiplicities(DimVectorD{2, 1, {{1, 2}, {2, 1}}}, 4);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, (MultiplicitiesD{2, 0, {{3, 1}}}));
  EXPECT_FALSE(tau_multiplicities(DimVectorA(std::map<int, int>{{0, 2}}), 1).has_value());
}

TEST(Combinatorics, QuiverDimensions) {
  EXPECT_EQ(quiver_dim(v_from_lambda(Coweight({3, 0, 0, -3})), framing_A(4)), 18);
  EXPECT_EQ(quiver_dim(DimVectorD{2, 1, {{1, 2}, {2, 1}}}, framing_D(4)), 12);
  EXPECT_EQ(quiver_dim(DimVectorA(), framing_A(3)), 0);
}

TEST(Combinatorics, TypeDDimensionFormula) {
  for (std::size_t r = 1; r <= 5; ++r)
    for (const Coweight& l : tools::dominant_coweights(r, 4)) {
      if (!is_symmetric(l)) continue;
      for (const XiClass& xi : xi_enumerate(l)) {
        const auto v = vD_from_xi(xi);
        EXPECT_EQ(v.has_value(), xi.m_minus <= v_from_lambda(l)[1]);
        if (!v) continue;
        const long diff = xi.m_plus - xi.m_minus;
        EXPECT_EQ(4 * quiver_dim(*v, framing_D(static_cast<int>(r))),
                  2 * positive_root_pairing(l) + static_cast<long>(r * r) - diff * diff);
      }
    }
}

TEST(Validate, ScalarExamples) {
  AdhmDatumA d = delta0_datum();
  EXPECT_TRUE(validate(d).ok());
  d.j_map = qm({{1}, {0}});
  const VerifyReport rep = validate(d);
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.checks.back().name, "adhm@0");
  AdhmDatumA z = AdhmDatumA::zero(2, DimVectorA(std::map<int, int>{{0, 1}}));
  EXPECT_TRUE(validate(z).ok());
}

TEST(Validate, ShapeErrors) {
  AdhmDatumA d = delta0_datum();
  d.i_map = qm({{1, 0, 0}});
  EXPECT_FALSE(validate(d).ok());
  EXPECT_ERROR_CODE(theta_psi_A(d), ErrorCode::InvalidDatum);
  AdhmDatumD e = delta0_datum_d();
  e.j_map = qm({{0, 0}, {1, 0}});
  EXPECT_FALSE(validate(e).ok());
}

TEST(Stability, Examples) {
  const AdhmDatumA d = delta0_datum();
  const Stability s = stability(d);
  EXPECT_TRUE(s.stable);
  EXPECT_TRUE(s.costable);
  AdhmDatumA no_i = d;
  no_i.i_map = qm({{0, 0}});
  EXPECT_FALSE(stability(no_i).costable);
  AdhmDatumA no_j = d;
  no_j.j_map = qm({{0}, {0}});
  EXPECT_FALSE(stability(no_j).stable);
  EXPECT_ERROR_CODE(theta_psi_A(no_i), ErrorCode::NotStableCostable);
}

TEST(Stability, InvariantUnderGroupActions) {
  tools::Generator gen(41);
  for (const Coweight& l : {Coweight({2, 0, -2}), Coweight({1, 1, -1, -1}), Coweight({2, -1, -1})}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const AdhmQuad q = sample_datum(l, seed).ungraded();
      const QMatrix m = qm({{gen.integer(1, 2), gen.integer(-1, 1)}, {gen.integer(-1, 1), gen.integer(3, 4)}});
      const Stability a = stability(act_gl2(q, m));
      EXPECT_TRUE(a.stable && a.costable);
      const AdhmQuad moved = act_gl2(q, m);
      const QMatrix ij = moved.b1 * moved.b2 - moved.b2 * moved.b1 + moved.i * moved.j;
      EXPECT_TRUE(ij.is_zero());
      const Stability b = stability(act_gl_v(q, gen.unimodular(q.n(), 6)));
      EXPECT_TRUE(b.stable && b.costable);
    }
  }
  AdhmQuad broken = delta0_datum().ungraded();
  broken.i = qm({{0, 0}});
  EXPECT_FALSE(stability(act_gl_v(broken, qm({{3}}))).costable);
}

TEST(GL2, Examples) {
  const AdhmQuad q = sample_datum(Coweight({2, 0, -2}), 3).ungraded();
  EXPECT_TRUE(same_maps(act_gl2(q, qm({{1, 0}, {0, 1}})), q));
  const AdhmQuad w = act_gl2(q, qm({{0, 1}, {-1, 0}}));
  EXPECT_TRUE(same_maps(w, AdhmQuad{-q.b2, q.b1, q.i, q.j}));
  const AdhmQuad d = act_gl2(q, qm({{2, 0}, {0, 3}}));
  EXPECT_TRUE(same_maps(d, AdhmQuad{Rational(2) * q.b1, Rational(3) * q.b2, Rational(6) * q.i, q.j}));
  EXPECT_ERROR_CODE(act_gl2(q, qm({{1, 1}, {1, 1}})), ErrorCode::SingularMatrix);
}

TEST(Dagger, Examples) {
  const DimVectorA dims(std::map<int, int>{{-1, 1}, {0, 2}, {1, 1}});
  const AdhmDatumA z = AdhmDatumA::zero(3, dims);
  const AdhmDatumA zd = dagger(z);
  EXPECT_EQ(zd.dims, dims.flipped());
  EXPECT_TRUE(zd.ungraded().b1.is_zero());
  const AdhmDatumA d = dagger(delta0_datum());
  EXPECT_TRUE(same_maps(d.ungraded(), delta0_datum().ungraded()));
}

TEST(Dagger, SquareNegatesMapsAndMatchesIota) {
  for (const Coweight& l : {Coweight({2, 0, -2}), Coweight({3, -1, -2}), Coweight({2, 1, -1, -2})}) {
    const AdhmDatumA d = sample_datum(l, 5);
    const AdhmDatumA dd = dagger(dagger(d));
    EXPECT_TRUE(validate(dagger(d)).ok());
    const AdhmQuad q = d.ungraded(), qq = dd.ungraded();
    EXPECT_TRUE(same_maps(qq, AdhmQuad{-q.b1, -q.b2, q.i, q.j}));
    EXPECT_EQ(theta_psi_A(dagger(d)), iota(theta_psi_A(d)));
  }
}

TEST(ThetaA, Examples) {
  EXPECT_EQ(theta_psi_A(delta0_datum()), LoopElement(m1({{"1", "0"}, {"t^-1", "1"}})));
  EXPECT_EQ(theta_psi_A(AdhmDatumA::zero(3, DimVectorA())), LoopElement::identity(3));
}

TEST(ThetaA, StratumMatchesDimensionVector) {
  for (std::size_t r = 2; r <= 4; ++r)
    for (const Coweight& l : tools::dominant_coweights(r, 2)) {
      const AdhmDatumA d = sample_datum(l, 17);
      EXPECT_EQ(d.dims, v_from_lambda(l));
      EXPECT_EQ(stratum(theta_psi_A(d)), lambda_from_v(d.dims, static_cast<int>(r)));
    }
}

TEST(ThetaD, Examples) {
  const LoopElement g = theta_psi_D(delta0_datum_d());
  EXPECT_EQ(g, LoopElement(m1({{"1", "0"}, {"t^-1", "1"}})));
  EXPECT_EQ(iota(g), g);
  EXPECT_EQ(theta_psi_D(AdhmDatumD::zero(3, DimVectorD{})), LoopElement::identity(3));
}

TEST(ThetaD, DisconnectedExample) {
  const Coweight l({3, 0, 0, -3});
  for (const XiClass& xi : xi_enumerate(l)) {
    const AdhmDatumD d = sample_datum(xi, 2);
    EXPECT_EQ(d.dims, *vD_from_xi(xi));
    const LoopElement g = theta_psi_D(d);
    EXPECT_EQ(classify_fixed(g), xi);
    EXPECT_EQ(g, theta_psi_A(expand(d)));
  }
}

TEST(ThetaD, AgreesWithExpandedTypeA) {
  for (std::size_t r = 2; r <= 4; ++r)
    for (const Coweight& l : tools::dominant_coweights(r, 3)) {
      if (!is_symmetric(l)) continue;
      for (const XiClass& xi : xi_enumerate(l)) {
        if (!vD_from_xi(xi)) continue;
        const AdhmDatumD d = sample_datum(xi, 23);
        const AdhmDatumA a = expand(d);
        EXPECT_TRUE(validate(a).ok());
        EXPECT_EQ(a.dims, v_from_lambda(l));
        const LoopElement g = theta_psi_D(d);
        EXPECT_EQ(g, theta_psi_A(a));
        EXPECT_EQ(iota(g), g);
      }
    }
}

TEST(Monad, ComplexAndRanks) {
  const AdhmQuad q = delta0_datum().ungraded();
  const MonadMaps m = monad_maps(q, {Rational(1), Rational(1), Rational(1)});
  EXPECT_TRUE((m.b * m.a).is_zero());
  EXPECT_EQ(rank(m.a), 1u);
  EXPECT_EQ(rank(m.b), 1u);
  const MonadMaps inf = monad_maps(q, {Rational(0), Rational(1), Rational(0)});
  EXPECT_EQ(inf.a, qm({{-1}, {0}, {0}, {0}}));
  EXPECT_EQ(rank(inf.a), 1u);
  const AdhmQuad empty = AdhmDatumA::zero(2, DimVectorA()).ungraded();
  const MonadMaps e = monad_maps(empty, {Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(e.a.cols(), 0u);
  EXPECT_EQ(e.b.rows(), 0u);
}

TEST(Monad, SymbolicComplex) {
  for (const Coweight& l : {Coweight({1, -1}), Coweight({2, 0, -2}), Coweight({2, 1, -1, -2})}) {
    const AdhmQuad q = sample_datum(l, 4).ungraded();
    const SymbolicMonad s = monad_maps_symbolic(q);
    EXPECT_TRUE((s.b * s.a).is_zero());
  }
}

TEST(Sampling, Examples) {
  const AdhmDatumA d = sample_datum(Coweight({1, -1}), 1);
  EXPECT_EQ(d.dims, DimVectorA(std::map<int, int>{{0, 1}}));
  EXPECT_TRUE(validate(d).ok());
  const AdhmDatumA z = sample_datum(Coweight::zero(3), 1);
  EXPECT_TRUE(z.dims.is_zero());
  EXPECT_EQ(stratum(theta_psi_A(sample_datum(Coweight({2, 0, -2}), 7))), Coweight({2, 0, -2}));
}

TEST(Sampling, DeterministicPerSeed) {
  const AdhmQuad a = sample_datum(Coweight({2, 1, -1, -2}), 99).ungraded();
  const AdhmQuad b = sample_datum(Coweight({2, 1, -1, -2}), 99).ungraded();
  EXPECT_TRUE(same_maps(a, b));
}

TEST(Sampling, ExhaustedBudget) {
  SampleOptions none;
  none.retries = 0;
  EXPECT_ERROR_CODE(sample_datum(Coweight({1, -1}), 1, none), ErrorCode::SamplingExhausted);
  EXPECT_ERROR_CODE(sample_datum(XiClass{Coweight::zero(3), 1, 2}, 1), ErrorCode::InvalidDatum);
}
