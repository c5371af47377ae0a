#include "grassline/rational.hpp"

#include <cctype>

#include "grassline/errors.hpp"

namespace grassline {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  std::size_t k = 0;
  if (allow_sign && k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(mpz_class(num_s));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) throw Error(ErrorCode::ParseError, "bad denominator in '" + std::string(text) + "'");
  mpz_class d(std::string{den});
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(mpz_class(num_s), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& q, int e) {
  if (e == 0) return 1;
  const unsigned long n = static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), n);
  if (e < 0) std::swap(num, den);
  if (den == 0) throw Error(ErrorCode::SingularMatrix, "negative power of zero");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace grassline
