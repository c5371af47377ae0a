#pragma once

#include <optional>
#include <vector>

#include "grassline/matrix.hpp"

namespace grassline {

struct RowEchelon {
  QMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(const QMatrix& a);
std::size_t rank(const QMatrix& a);

// Columns form a basis of {x : a x = 0}.
QMatrix nullspace(const QMatrix& a);

// Columns form a basis of the column space of a.
QMatrix column_basis(const QMatrix& a);

// Some x with a x = b, or nullopt when inconsistent.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

QMatrix inverse(const QMatrix& a);  // throws SingularMatrix

QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);

}  // namespace grassline
