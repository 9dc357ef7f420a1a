#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace noethera {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// q^e for integer e; e < 0 requires q != 0.
Rational rational_pow(const Rational& q, long e);

// "3", "-7/2". Stable form used by the printer and the JSON reports.
std::string rational_str(const Rational& q);

// Parses an optionally signed integer or a/b fraction; nullopt on junk.
std::optional<Rational> rational_parse(const std::string& text);

} // namespace noethera
