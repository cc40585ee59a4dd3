#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace zigzag {

// Exact arithmetic used by all counting and polynomial code. GMP-backed;
// never convert to floating point except through to_double at the edges.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

double to_double(const Rational& r);

// Accepts "p/q", plain integers and decimal literals ("0.25", "-3").
Rational parse_rational(const std::string& s);

// Canonical "p/q" (or "p" when q == 1); inverse of parse_rational.
std::string rational_string(const Rational& r);

}  // namespace zigzag
