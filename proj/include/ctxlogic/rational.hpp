#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace ctxlogic {

using Rational = boost::rational<long long>;

// Parses "n" or "n/d" with non-negative integers; throws Error(range) otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// num/den >= c, with den > 0. An empty denominator is handled by callers.
inline bool ratio_at_least(long long num, long long den, const Rational& c) {
  return num * c.denominator() >= c.numerator() * den;
}

}  // namespace ctxlogic
