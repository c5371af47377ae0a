#pragma once

#include <vector>

#include "grassline/matrix.hpp"

namespace grassline {

// M = left * diag(t^exponents) * right with ascending exponents and
// unimodular polynomial factors; det(left) = 1.
struct SnfResult {
  LaurentMatrix1 left;
  std::vector<int> exponents;
  LaurentMatrix1 right;
};

SnfResult smith_normal_form(const LaurentMatrix1& m);

}  // namespace grassline
