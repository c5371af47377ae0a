#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "grassline/loopgroup.hpp"
#include "grassline/matrix.hpp"
#include "grassline/transitions.hpp"

namespace grassline {

// Dimension vector on the A-infinity graph (vertices indexed by Z).
class DimVectorA {
 public:
  DimVectorA() = default;
  explicit DimVectorA(const std::map<int, int>& v);

  int operator[](int i) const;
  const std::map<int, int>& entries() const { return v_; }
  bool is_zero() const { return v_.empty(); }
  // Smallest interval containing the support and 0.
  int lo() const;
  int hi() const;
  int total() const;
  DimVectorA flipped() const;  // v_i -> v_{-i}

  friend bool operator==(const DimVectorA&, const DimVectorA&) = default;

 private:
  std::map<int, int> v_;  // positive entries only
};

// Dimension vector on the D-infinity graph: vertices (0,+), (0,-), 1, 2, ...
struct DimVectorD {
  int v0_plus = 0;
  int v0_minus = 0;
  std::map<int, int> v;  // keys >= 1, positive entries only

  int at(int i) const;  // i >= 1
  int top() const;      // largest i >= 1 with v_i > 0, or 0
  void validate() const;

  friend bool operator==(const DimVectorD&, const DimVectorD&) = default;
};

// Ungraded view (B1, B2, i, j) on V of dimension n with W of dimension r.
struct AdhmQuad {
  QMatrix b1;  // n x n
  QMatrix b2;  // n x n
  QMatrix i;   // n x r
  QMatrix j;   // r x n

  std::size_t n() const { return b1.rows(); }
  std::size_t r() const { return i.cols(); }
};

struct AdhmDatumA {
  int r = 0;
  DimVectorA dims;
  std::map<int, QMatrix> b1;  // b1[k]: V_k -> V_{k-1}
  std::map<int, QMatrix> b2;  // b2[k]: V_k -> V_{k+1}
  QMatrix i_map;              // W -> V_0
  QMatrix j_map;              // V_0 -> W

  // All maps zero, one block per degree in [dims.lo(), dims.hi()].
  static AdhmDatumA zero(int r, const DimVectorA& dims);
  AdhmQuad ungraded() const;
  // Offset of V_k inside the ungraded basis.
  std::size_t offset(int k) const;
};

struct AdhmDatumD {
  int r = 0;
  DimVectorD dims;
  QMatrix b1_plus;            // V_1 -> V_{0,+}
  QMatrix b1_minus;           // V_1 -> V_{0,-}
  QMatrix b2_plus;            // V_{0,+} -> V_1
  QMatrix b2_minus;           // V_{0,-} -> V_1
  std::map<int, QMatrix> b1;  // b1[k], k >= 1: V_{k+1} -> V_k
  std::map<int, QMatrix> b2;  // b2[k], k >= 1: V_k -> V_{k+1}
  QMatrix i_map;              // W -> V_{0,+}
  QMatrix j_map;              // V_{0,+} -> W

  static AdhmDatumD zero(int r, const DimVectorD& dims);
};

using XiClass = FixedClass;

struct MultiplicitiesD {
  int m0_plus = 0;
  int m0_minus = 0;
  std::map<int, int> m;  // keys >= 1, nonzero entries only

  friend bool operator==(const MultiplicitiesD&, const MultiplicitiesD&) = default;
};

struct Stability {
  bool stable;
  bool costable;
};

// Combinatorics.
DimVectorA v_from_lambda(const Coweight& lambda);
Coweight lambda_from_v(const DimVectorA& v, int r);
int chern_number(const DimVectorA& v);
std::vector<XiClass> xi_enumerate(const Coweight& lambda);
std::optional<DimVectorD> vD_from_xi(const XiClass& xi);
std::optional<std::map<int, int>> tau_multiplicities(const DimVectorA& v, int r);
std::optional<MultiplicitiesD> tau_multiplicities(const DimVectorD& v, int r);
long quiver_dim(const DimVectorA& v, const DimVectorA& w);
long quiver_dim(const DimVectorD& v, const DimVectorD& w);
DimVectorA framing_A(int r);  // r at vertex 0
DimVectorD framing_D(int r);  // r at vertex (0,+)

// Data.
VerifyReport validate(const AdhmDatumA& d);
VerifyReport validate(const AdhmDatumD& d);
Stability stability(const AdhmQuad& q);
Stability stability(const AdhmDatumA& d);
Stability stability(const AdhmDatumD& d);

AdhmQuad act_gl2(const AdhmQuad& q, const QMatrix& m);
// g acts by (g B1 g^-1, g B2 g^-1, g i, j g^-1).
AdhmQuad act_gl_v(const AdhmQuad& q, const QMatrix& g);
AdhmDatumA dagger(const AdhmDatumA& d);
AdhmDatumA expand(const AdhmDatumD& d);

// 1 + sum_k j B2^k B1^k i t^{-k-1}; B1 must be nilpotent.
LaurentMatrix1 theta_series(const AdhmQuad& q);
LoopElement theta_psi_A(const AdhmDatumA& d);
LoopElement theta_psi_D(const AdhmDatumD& d);

struct MonadMaps {
  QMatrix a;  // (2n + r) x n
  QMatrix b;  // n x (2n + r)
};
struct SymbolicMonad {
  Matrix<Poly3> a;
  Matrix<Poly3> b;
};
MonadMaps monad_maps(const AdhmQuad& q, const std::array<Rational, 3>& point);
SymbolicMonad monad_maps_symbolic(const AdhmQuad& q);

struct SampleOptions {
  int retries = 32;
};
AdhmDatumA sample_datum(const Coweight& lambda, std::uint64_t seed, const SampleOptions& opts = {});
AdhmDatumD sample_datum(const XiClass& xi, std::uint64_t seed, const SampleOptions& opts = {});

}  // namespace grassline
