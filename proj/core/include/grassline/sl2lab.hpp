#pragma once

#include <vector>

#include "grassline/adhm.hpp"
#include "grassline/loopgroup.hpp"
#include "grassline/transitions.hpp"

namespace grassline {

using Partition = std::vector<int>;  // weakly decreasing, positive

struct Sl2TripleData {
  QMatrix e;
  QMatrix h;
  QMatrix f;
};

// Defining equations of Gr_0^{m alpha} in SL(2): degree <= m, det 1 and
// x_m != 0; with iota_fixed also g(t^-1) g(-t^-1) = 1.
VerifyReport sl2_membership(const LoopElement& g, int m, bool iota_fixed = true);

Partition jordan_type(const QMatrix& x);

// Standard triple: block-diagonal, one Jordan block per part.
Sl2TripleData sl2_triple(const Partition& mu);
// x lies in e + ker(ad f)
bool slodowy_member(const QMatrix& x, const Sl2TripleData& triple);
// x^T J + J x = 0
bool in_symplectic(const QMatrix& x, const QMatrix& j);

QMatrix commutator(const QMatrix& a, const QMatrix& b);

struct TypeDSl2 {
  DimVectorD dims;
  DimVectorD framing;
  long expected_dim;
};
// Odd m only: dims ((m+1)/2, (m-1)/2, m-1, ..., 1) with framing 2 at (0,+).
TypeDSl2 typeD_dims_sl2(int m);

}  // namespace grassline
