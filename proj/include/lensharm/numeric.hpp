#ifndef LENSHARM_NUMERIC_HPP
#define LENSHARM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lensharm {

// Exact arithmetic types used throughout. Counts and binomials are cpp_int so
// no overflow budget has to be assumed anywhere; geometric quantities
// (volumes, measure values) are exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// n! as an exact integer.
Int factorial(long long n);

// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Int binomial(long long n, long long k);

// Smallest nonnegative representative of a modulo q (q >= 1).
long long mod_reduce(long long a, long long q);

// (a * b) mod q without intermediate overflow.
long long mul_mod(long long a, long long b, long long q);

// Inverse of a modulo q; throws std::invalid_argument unless gcd(a, q) = 1.
long long mod_inverse(long long a, long long q);

long long gcd_ll(long long a, long long b);

// "num" when the denominator is 1, otherwise "num/den".
std::string rat_str(const Rat& r);

// Decimal expansion of an exact rational, good to `digits` significant digits.
std::string rat_decimal(const Rat& r, int digits);

long double rat_to_ld(const Rat& r);

// Thrown when an enumeration or sampling request exceeds its work cap.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lensharm

#endif
