#include "mop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mop {

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer num{std::string(num_text)};
  Integer den{std::string(den_text)};
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace mop
