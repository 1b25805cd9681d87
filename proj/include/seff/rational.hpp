#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace seff {

// All arithmetic in this library is exact. Rationals are arbitrary precision
// and always kept reduced with a positive denominator (cpp_rational maintains
// that canonical form itself); equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Single exception type for precondition and format errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Canonical serialization: "<numerator>/<denominator>" with denominator > 0,
// e.g. "0/1", "3/4", "-1/2". No floating point anywhere.
std::string to_string(const Rational& r);

// Accepts "p/q" or a bare integer "p" (optional leading '-').
Rational parse_rational(const std::string& text);

inline bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

}  // namespace seff
