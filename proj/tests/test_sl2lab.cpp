#include "grassline/sl2lab.hpp"
#include "grassline/tools/generators.hpp"
#include "support.hpp"

using namespace grassline;
using namespace testing_support;

namespace {

bool check_passed(const VerifyReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.pass;
  ADD_FAILURE() << "no check named " << name;
  return false;
}

}  // namespace

TEST(Sl2Membership, Examples) {
  const LoopElement g(m1({{"1", "0"}, {"t^-1", "1"}}));
  EXPECT_TRUE(sl2_membership(g, 1).ok());
  const VerifyReport too_high = sl2_membership(g, 2);
  EXPECT_FALSE(too_high.ok());
  EXPECT_FALSE(check_passed(too_high, "x_m_nonzero"));
  EXPECT_FALSE(check_passed(sl2_membership(g, 0), "degree"));
  EXPECT_TRUE(sl2_membership(LoopElement::identity(2), 0).ok());
}

TEST(Sl2Membership, IotaFixedCheck) {
  const LoopElement g(m1({{"1", "t^-1 + t^-2"}, {"0", "1"}}));
  const VerifyReport rep = sl2_membership(g, 2);
  EXPECT_FALSE(check_passed(rep, "iota_fixed"));
  EXPECT_TRUE(check_passed(rep, "degree"));
  EXPECT_TRUE(sl2_membership(g, 2, false).ok());
  EXPECT_FALSE(sl2_membership(LoopElement::identity(3), 0).ok());
}

TEST(Sl2Membership, SampledTypeDPoints) {
  for (int m = 1; m <= 7; m += 2) {
    const Coweight l({m, -m});
    const auto classes = xi_enumerate(l);
    ASSERT_EQ(classes.size(), 1u);
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      const LoopElement g = theta_psi_D(sample_datum(classes.front(), seed));
      EXPECT_TRUE(sl2_membership(g, m).ok()) << "m = " << m;
    }
  }
}

TEST(JordanType, Examples) {
  EXPECT_EQ(jordan_type(QMatrix(3, 3)), (Partition{1, 1, 1}));
  EXPECT_EQ(jordan_type(sl2_triple({3, 1}).e), (Partition{3, 1}));
  EXPECT_EQ(jordan_type(qm({{1, 1}, {-1, -1}})), (Partition{2}));
  EXPECT_ERROR_CODE(jordan_type(qm({{1, 0}, {0, 0}})), ErrorCode::NotNilpotent);
}

TEST(Triple, BracketsForAllPartitions) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : tools::partitions(n)) {
      const Sl2TripleData t = sl2_triple(mu);
      EXPECT_EQ(commutator(t.e, t.f), t.h);
      EXPECT_EQ(commutator(t.h, t.e), Rational(2) * t.e);
      EXPECT_EQ(commutator(t.h, t.f), Rational(-2) * t.f);
      EXPECT_EQ(jordan_type(t.e), mu);
      EXPECT_EQ(jordan_type(t.f), mu);
    }
  EXPECT_ERROR_CODE(sl2_triple({1, 2}), ErrorCode::DimensionMismatch);
}

TEST(Slodowy, Membership) {
  const Sl2TripleData t = sl2_triple({2});
  EXPECT_TRUE(slodowy_member(t.e, t));
  EXPECT_TRUE(slodowy_member(t.e + Rational(5) * t.f, t));
  EXPECT_FALSE(slodowy_member(t.e + t.h, t));
  const Sl2TripleData big = sl2_triple({3, 1});
  EXPECT_TRUE(slodowy_member(big.e + big.f, big));
  EXPECT_ERROR_CODE(slodowy_member(QMatrix(3, 3), t), ErrorCode::DimensionMismatch);
}

TEST(Symplectic, Membership) {
  const QMatrix j = qm({{0, 1}, {-1, 0}});
  const Sl2TripleData t = sl2_triple({2});
  EXPECT_TRUE(in_symplectic(t.e, j));
  EXPECT_TRUE(in_symplectic(t.h, j));
  EXPECT_FALSE(in_symplectic(QMatrix::identity(2), j));
}

TEST(TypeD, Dimensions) {
  const TypeDSl2 one = typeD_dims_sl2(1);
  EXPECT_EQ(one.dims, (DimVectorD{1, 0, {}}));
  EXPECT_EQ(one.expected_dim, 2);
  const TypeDSl2 three = typeD_dims_sl2(3);
  EXPECT_EQ(three.dims, (DimVectorD{2, 1, {{1, 2}, {2, 1}}}));
  EXPECT_EQ(three.expected_dim, 4);
  EXPECT_ERROR_CODE(typeD_dims_sl2(2), ErrorCode::EvenM);
  EXPECT_ERROR_CODE(typeD_dims_sl2(0), ErrorCode::InvalidCoweight);
}

TEST(TypeD, AgreesWithGeneralFormulas) {
  for (int m = 1; m <= 11; m += 2) {
    const TypeDSl2 d = typeD_dims_sl2(m);
    EXPECT_EQ(d.dims, *vD_from_xi({Coweight({m, -m}), 0, 0}));
    EXPECT_EQ(quiver_dim(d.dims, d.framing), d.expected_dim);
  }
  for (int m = 2; m <= 12; m += 2) EXPECT_TRUE(xi_enumerate(Coweight({m, -m})).empty());
}
