#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kfl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace kfl
