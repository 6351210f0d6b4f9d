#include "cohomtab/rational.hpp"

#include <cctype>

#include "cohomtab/errors.hpp"

namespace cohomtab {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer p(strip_plus(num));
  Integer q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value, bool pretty) {
  std::string out = value.get_num().get_str();
  if (pretty && value.get_den() == 1) return out;
  out += '/';
  out += value.get_den().get_str();
  return out;
}

}  // namespace cohomtab
