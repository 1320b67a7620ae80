#ifndef DAISY_NUMBERS_HPP
#define DAISY_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace daisy {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial, no overflow.
BigInt binom_big(std::uint64_t n, std::uint64_t k);

// Largest x with x^k <= a. Requires a >= 0, k >= 1.
BigInt iroot_floor(const BigInt& a, int k);

// Canonical "p/q" form, denominator always present and positive.
std::string rational_str(const Rational& r);

} // namespace daisy

#endif
