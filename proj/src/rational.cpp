#include "invforge/rational.hpp"

#include <cctype>

#include "invforge/errors.hpp"

namespace invforge {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw ParseError("bad denominator '" + std::string(den) + "'", slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("bad numerator '" + std::string(num) + "'", 0);

  Rational value;
  value.get_num() = Integer(std::string(num.front() == '+' ? num.substr(1) : num));
  value.get_den() = den.empty() ? Integer(1) : Integer(std::string(den));
  if (value.get_den() == 0) throw ParseError("zero denominator", num.size() + 1);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace invforge
