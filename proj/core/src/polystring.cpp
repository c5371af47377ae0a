#include "grassline/polystring.hpp"

#include <cctype>
#include <vector>

namespace grassline {

namespace {

std::string normalize(std::string_view text) {
  std::string s;
  for (std::size_t k = 0; k < text.size(); ++k) {
    // U+2212 MINUS SIGN
    if (k + 2 < text.size() + 0 && static_cast<unsigned char>(text[k]) == 0xE2 &&
        static_cast<unsigned char>(text[k + 1]) == 0x88 && static_cast<unsigned char>(text[k + 2]) == 0x92) {
      s += '-';
      k += 2;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(text[k]))) s += text[k];
  }
  return s;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) return false;
  long v = 0;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    v = v * 10 + (s[k] - '0');
    if (v > 1000000) return false;
  }
  out = static_cast<int>(s[0] == '-' ? -v : v);
  return true;
}

}  // namespace

template <std::size_t N>
LaurentPoly<N> parse_poly(std::string_view text, const VarNames<N>& vars) {
  const std::string s = normalize(text);
  const auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, why + " in polynomial '" + std::string(text) + "'");
  };
  if (s.empty()) throw fail("empty input");

  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '^' && s[k - 1] != '*' && s[k - 1] != '/') {
      pieces.push_back(s.substr(start, k - start));
      start = k;
    }
  }
  pieces.push_back(s.substr(start));

  LaurentPoly<N> out;
  for (std::string piece : pieces) {
    Rational coeff = 1;
    if (!piece.empty() && (piece[0] == '+' || piece[0] == '-')) {
      if (piece[0] == '-') coeff = -1;
      piece.erase(0, 1);
    }
    if (piece.empty()) throw fail("dangling sign");
    typename LaurentPoly<N>::Exponent e{};
    std::size_t pos = 0;
    while (pos <= piece.size()) {
      const std::size_t star = piece.find('*', pos);
      const std::string factor = piece.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      if (factor.empty()) throw fail("empty factor");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coeff *= parse_rational(factor);
      } else {
        const std::size_t caret = factor.find('^');
        const std::string name = factor.substr(0, caret);
        std::size_t idx = N;
        for (std::size_t v = 0; v < N; ++v)
          if (vars[v] == name) idx = v;
        if (idx == N) throw fail("unknown variable '" + name + "'");
        int power = 1;
        if (caret != std::string::npos && !parse_int(std::string_view(factor).substr(caret + 1), power))
          throw fail("bad exponent");
        e[idx] += power;
      }
      if (star == std::string::npos) break;
      pos = star + 1;
    }
    out.add_term(e, coeff);
  }
  return out;
}

template <std::size_t N>
std::string format_poly(const LaurentPoly<N>& p, const VarNames<N>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      out += format_rational(c);
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += format_rational(abs(c));
    }
    first = false;
    for (std::size_t v = 0; v < N; ++v)
      if (e[v] != 0) out += "*" + vars[v] + "^" + std::to_string(e[v]);
  }
  return out;
}

template LaurentPoly<1> parse_poly<1>(std::string_view, const VarNames<1>&);
template LaurentPoly<2> parse_poly<2>(std::string_view, const VarNames<2>&);
template LaurentPoly<3> parse_poly<3>(std::string_view, const VarNames<3>&);
template std::string format_poly<1>(const LaurentPoly<1>&, const VarNames<1>&);
template std::string format_poly<2>(const LaurentPoly<2>&, const VarNames<2>&);
template std::string format_poly<3>(const LaurentPoly<3>&, const VarNames<3>&);

std::string format_matrix(const QMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_rational(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace grassline
