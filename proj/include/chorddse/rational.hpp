#ifndef CHORDDSE_RATIONAL_HPP
#define CHORDDSE_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chorddse {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Generalized binomial coefficient a(a-1)...(a-k+1)/k!, exact for any
// rational a and non-negative k.
Rational gen_binomial(const Rational& a, int k);

Rational factorial(int n);
Rational binomial(int n, int k);

// Accepts "p", "-p" and "p/q".
Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& r);

}  // namespace chorddse

#endif
