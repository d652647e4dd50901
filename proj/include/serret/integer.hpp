#pragma once

#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace serret {

using Integer = boost::multiprecision::cpp_int;

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& n);

bool is_square(const Integer& n);

/// Floor division, rounding toward negative infinity. `den` must be nonzero.
Integer floor_div(const Integer& num, const Integer& den);

Integer gcd3(const Integer& a, const Integer& b, const Integer& c);

/// Writes n > 0 as m^2 * d with d squarefree. Returns {m, d}.
///
/// Small factors are removed by trial division; the cofactor is split with
/// Miller-Rabin and Pollard-Brent, so this is practical for the radicands that
/// arise from matrix traces of moderate size.
std::pair<Integer, Integer> square_decompose(const Integer& n);

bool is_squarefree(const Integer& n);

Integer parse_integer(const std::string& text);

inline int sign(const Integer& n) { return n.sign(); }

}  // namespace serret
