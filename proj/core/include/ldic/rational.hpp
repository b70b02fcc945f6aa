#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ldic {

/// Exact rational used for every rate and locality value.
using Rational = boost::rational<std::int64_t>;

/// Lowest-terms rendering: "3" or "8/5" (never decimals).
std::string to_string(const Rational& value);

/// Parses "p", "p/q" or "-p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

} // namespace ldic
