#include <cctype>

#include "otlab/exact_core.hpp"

namespace otlab {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

BigInt parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("empty integer");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("not an integer: '" + std::string(s) + "'");
  BigInt v;
  if (v.set_str(std::string(s.front() == '+' ? s.substr(1) : s), 10) != 0)
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(parse_integer(text), 1);
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace otlab
