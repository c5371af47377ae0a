#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "grassline/errors.hpp"
#include "grassline/matrix.hpp"
#include "grassline/polystring.hpp"

namespace testing_support {

using namespace grassline;

inline LaurentMatrix1 m1(std::initializer_list<std::initializer_list<const char*>> rows) {
  LaurentMatrix1 m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* e : row) m(i, j++) = parse_poly<1>(e, kVarT);
    ++i;
  }
  return m;
}

inline LaurentMatrix2 m2(std::initializer_list<std::initializer_list<const char*>> rows,
                         const VarNames<2>& vars = kVarsTU) {
  LaurentMatrix2 m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* e : row) m(i, j++) = parse_poly<2>(e, vars);
    ++i;
  }
  return m;
}

inline QMatrix qm(std::initializer_list<std::initializer_list<int>> rows) {
  QMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

// Leibniz expansion over all permutations.
template <class T>
T leibniz_det(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * a(i, perm[i]);
    total = inversions % 2 ? T(total - term) : T(total + term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace testing_support

#define EXPECT_ERROR_CODE(stmt, expected)                                   \
  do {                                                                      \
    try {                                                                   \
      stmt;                                                                 \
      ADD_FAILURE() << "expected " << grassline::error_name(expected);      \
    } catch (const grassline::Error& e) {                                   \
      EXPECT_EQ(e.code(), expected) << e.what();                            \
    }                                                                       \
  } while (0)
