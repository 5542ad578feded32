#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace superschur {

// Exact arithmetic only. Integer coefficients everywhere in the algebra
// layers; rationals appear solely in the linear-algebra layer.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace superschur
