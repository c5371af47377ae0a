#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grassline/loopgroup.hpp"
#include "grassline/transitions.hpp"

namespace grassline::tools {

// Deterministic source of small exact test inputs.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi);
  Rational small_nonzero();  // +-1, +-2, +-1/2
  // Product of elementary matrices with small integer entries; det 1.
  QMatrix unimodular(std::size_t r, int factors = 4);
  // Strictly upper triangular with small entries, conjugated by a unimodular matrix.
  QMatrix nilpotent(std::size_t r);
  // h J_mu h^-1 for the Jordan form of type mu.
  QMatrix nilpotent_of_type(const std::vector<int>& mu);
  // Product of conjugated exponential embeddings.
  LoopElement loop_element(std::size_t r, int factors = 2);

  // Products of elementary matrices whose off-diagonal monomials t^a u^b
  // have a in [a_lo, a_hi] and b in [b_lo, b_hi].
  LaurentMatrix2 elementary_product(std::size_t r, int a_lo, int a_hi, int b_lo, int b_hi, int factors = 2);
  GaugeElement gauge(std::size_t r);
  // Polynomial matrix in t with monomial determinant.
  LaurentMatrix1 monomial_det_matrix(std::size_t r);

 private:
  std::mt19937_64 engine_;
};

// All weakly decreasing integer vectors of length r with zero sum and
// entries in [-bound, bound].
std::vector<Coweight> dominant_coweights(std::size_t r, int bound);
// All partitions of n, descending parts.
std::vector<std::vector<int>> partitions(int n);

}  // namespace grassline::tools
