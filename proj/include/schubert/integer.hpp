#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Integer& value) { return value.str(); }

inline Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace schubert
