#pragma once

#include <array>
#include <string>
#include <string_view>

#include "grassline/laurent.hpp"
#include "grassline/matrix.hpp"

namespace grassline {

// Grammar: sum of terms joined by '+'/'-', term := rational ('*' var '^' int)*.
// The parser also accepts bare variables ("t", "-t^-1") and a missing "^1".
template <std::size_t N>
using VarNames = std::array<std::string, N>;

inline const VarNames<1> kVarT{"t"};
inline const VarNames<2> kVarsTU{"t", "u"};
inline const VarNames<2> kVarsS{"s1", "s2"};
inline const VarNames<3> kVarsZ{"z0", "z1", "z2"};

template <std::size_t N>
LaurentPoly<N> parse_poly(std::string_view text, const VarNames<N>& vars);

template <std::size_t N>
std::string format_poly(const LaurentPoly<N>& p, const VarNames<N>& vars);

extern template LaurentPoly<1> parse_poly<1>(std::string_view, const VarNames<1>&);
extern template LaurentPoly<2> parse_poly<2>(std::string_view, const VarNames<2>&);
extern template LaurentPoly<3> parse_poly<3>(std::string_view, const VarNames<3>&);
extern template std::string format_poly<1>(const LaurentPoly<1>&, const VarNames<1>&);
extern template std::string format_poly<2>(const LaurentPoly<2>&, const VarNames<2>&);
extern template std::string format_poly<3>(const LaurentPoly<3>&, const VarNames<3>&);

// Compact text form of a matrix, e.g. [[1, 1*t^-1], [0, 1]], for witnesses and logs.
template <std::size_t N>
std::string format_matrix(const Matrix<LaurentPoly<N>>& m, const VarNames<N>& vars) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_poly(m(i, j), vars);
    }
    out += "]";
  }
  return out + "]";
}
std::string format_matrix(const QMatrix& m);

}  // namespace grassline
