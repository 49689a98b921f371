#ifndef SHADOWBOUNDS_ARITH_HPP
#define SHADOWBOUNDS_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parameters outside an operation's domain (bad congruence, negative input, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed input text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A violated internal invariant; never expected on any input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// C(n, k); zero when k < 0 or k > n. Rejects n < 0.
BigInt binom(std::int64_t n, std::int64_t k);

// Smallest t >= 0 with t*t >= m.
BigInt ceil_sqrt(const BigInt& m);

// Smallest t >= 0 with t*t >= 4m, i.e. the ceiling of 2*sqrt(m).
BigInt ceil_two_sqrt(const BigInt& m);

// Exact ceiling of a/b; requires b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

// num/den with the sign moved into the numerator; rejects den == 0. (The
// underlying rational type refuses negative denominators.)
Rational make_rational(BigInt num, BigInt den);

BigInt floor_rat(const Rational& r);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rational& r);

std::int64_t to_int64(const BigInt& v);

}  // namespace sdb

#endif
