#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grassline/loopgroup.hpp"
#include "grassline/matrix.hpp"

namespace grassline {

struct CheckResult {
  std::string name;
  bool pass;
  std::optional<std::string> witness;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  void add(std::string name, bool pass, std::optional<std::string> witness = std::nullopt);
  void append(const VerifyReport& other, const std::string& prefix = "");
};

// Exponent 0 is t, exponent 1 is u.
struct TransitionQuad {
  LaurentMatrix2 g01_00;
  LaurentMatrix2 g10_00;
  LaurentMatrix2 g11_01;
  LaurentMatrix2 g11_10;

  friend bool operator==(const TransitionQuad&, const TransitionQuad&) = default;
};

// Exponent 0 is s1, exponent 1 is s2.
struct TransitionTriple {
  LaurentMatrix2 g1_0;
  LaurentMatrix2 g2_0;
  LaurentMatrix2 g2_1;

  friend bool operator==(const TransitionTriple&, const TransitionTriple&) = default;
};

struct GaugeElement {
  LaurentMatrix2 h00;
  LaurentMatrix2 h01;
  LaurentMatrix2 h10;
  LaurentMatrix2 h11;

  static GaugeElement identity(std::size_t r);
};

struct BirkhoffSplit {
  LaurentMatrix2 left;   // t, u <= 0 with both zero slices the identity
  LaurentMatrix2 right;  // t >= 0, u <= 0 with the u^0 slice the identity
};

struct SplitOptions {
  // Overrides the default order bound (u-degree times t-span plus one).
  std::optional<int> max_orders;
};

// gamma(t^-1) with t^-1 replaced by (tu)^-1, resp. (s1 s2)^-1.
LaurentMatrix2 diagonal_substitution(const LaurentMatrix1& gamma);
// t^a u^b -> t^b u^a
LaurentMatrix2 swap_variables(const LaurentMatrix2& m);

TransitionQuad build_quad(const Factorization& f);
VerifyReport verify_quad(const TransitionQuad& q);
VerifyReport verify_gauge(const GaugeElement& h);

TransitionQuad act_gauge(const TransitionQuad& q, const GaugeElement& h);
TransitionQuad act_torus(const TransitionQuad& q, const Rational& alpha, const Rational& beta);
TransitionQuad act_swap(const TransitionQuad& q);
TransitionQuad act_G(const TransitionQuad& q, const QMatrix& g);
// [[0,1],[-1,0]] acting as act_torus(-1, 1) after act_swap.
TransitionQuad act_weyl(const TransitionQuad& q);

BirkhoffSplit birkhoff_split_u(const LaurentMatrix2& g, const SplitOptions& opts = {});
LoopElement extract_quad(const TransitionQuad& q, const SplitOptions& opts = {});

TransitionTriple build_triple(const Factorization& f);
VerifyReport verify_triple(const TransitionTriple& tr);
LoopElement extract_triple(const TransitionTriple& tr);

}  // namespace grassline
