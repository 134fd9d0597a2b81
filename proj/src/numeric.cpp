#include "lensharm/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <iomanip>
#include <sstream>

namespace lensharm {

Int factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int c = 1;
  for (long long i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;  // exact at every step: c is C(n-k+i, i)
  }
  return c;
}

long long mod_reduce(long long a, long long q) {
  if (q < 1) throw std::invalid_argument("modulus must be positive");
  long long r = a % q;
  return r < 0 ? r + q : r;
}

long long mul_mod(long long a, long long b, long long q) {
  return static_cast<long long>(
      static_cast<__int128>(mod_reduce(a, q)) * mod_reduce(b, q) % q);
}

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long mod_inverse(long long a, long long q) {
  a = mod_reduce(a, q);
  long long r0 = q, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long t = r0 / r1;
    long long r2 = r0 - t * r1;
    long long s2 = s0 - t * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("element is not a unit modulo q");
  return mod_reduce(s0, q);
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string rat_decimal(const Rat& r, int digits) {
  using hp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>>;
  hp x = hp(numerator(r)) / hp(denominator(r));
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

long double rat_to_ld(const Rat& r) {
  return numerator(r).convert_to<long double>() /
         denominator(r).convert_to<long double>();
}

}  // namespace lensharm
