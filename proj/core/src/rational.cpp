#include "quadell/rational.hpp"

#include <cctype>

#include "quadell/errors.hpp"

namespace quadell {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "make_rational", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Int parse_int(const std::string& text) {
  if (!valid_integer_token(text))
    throw Error(ErrorKind::InvalidArgument, "parse_int", "not an integer: '" + text + "'");
  return Int(text);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int n = parse_int(text.substr(0, slash));
  Int d = parse_int(text.substr(slash + 1));
  return make_rational(n, d);
}

}  // namespace quadell
