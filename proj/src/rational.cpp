#include "seff/rational.hpp"

#include <cctype>

namespace seff {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&]() -> Error {
    return Error("invalid rational literal '" + text + "' (expected p or p/q)");
  };
  if (text.empty()) throw bad();
  std::size_t start = 0;
  if (text[0] == '-') start = 1;
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(text, start, text.size())) throw bad();
    return Rational(Integer(text));
  }
  if (!all_digits(text, start, slash) || !all_digits(text, slash + 1, text.size()))
    throw bad();
  Integer num(text.substr(0, slash));
  Integer den(text.substr(slash + 1));
  if (den == 0) throw Error("invalid rational literal '" + text + "': zero denominator");
  return Rational(num, den);
}

}  // namespace seff
