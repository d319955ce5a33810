#ifndef GCG_RATIONAL_HPP
#define GCG_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace gcg {

// All payoffs, welfare values and potentials are exact.
// Compare for equality against Rational(n), not a bare integer: with Boost
// 1.74 under C++20 the mixed == and != overloads recurse without end.
using Rational = boost::rational<std::int64_t>;

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

// Accepts "a/b", integers and plain decimals ("0.25", "-3", "1.").
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// Exact decimal when the denominator has only factors 2 and 5,
// otherwise "num/den".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace gcg

#endif  // GCG_RATIONAL_HPP
