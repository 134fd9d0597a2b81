#include "lensharm/oracle.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sstream>
#include <stdexcept>

namespace lensharm::oracle {

namespace {

// ---------------------------------------------------------------------------
// Brute-force shell counting: walk every candidate coordinate vector of the
// requested norm and test the congruence from scratch.
// ---------------------------------------------------------------------------

long long signed_shell_size(int n, long long s) {
  // points of l1 norm s in Z^n: sum over the number k of nonzero coordinates
  if (s == 0) return 1;
  long long total = 0;
  for (int k = 1; k <= n; ++k) {
    // C(n, k) placements, 2^k sign patterns, C(s-1, k-1) positive splits
    long double v = 1;
    for (int i = 1; i <= k; ++i) v *= static_cast<long double>(n - k + i) / i;
    for (int i = 1; i <= k - 1; ++i) v *= static_cast<long double>(s - k + i) / i;
    v *= powl(2.0L, k);
    total += static_cast<long long>(v + 0.5L);
    if (total > 100'000'000) return total;  // caller rejects anyway
  }
  return total;
}

bool residue_vanishes(const LensParams& params,
                      const std::vector<long long>& coords) {
  long long acc = 0;
  const long long q = params.q();
  for (std::size_t j = 0; j < coords.size(); ++j) {
    long long c = coords[j] % q;
    if (c < 0) c += q;
    acc = (acc + c * (params.p()[j] % q)) % q;
  }
  return acc == 0;
}

}  // namespace

long long brute_shell_count(const LensParams& params, BruteRegion region,
                            long long s) {
  if (s < 0) throw std::invalid_argument("negative shell norm");
  const int n = params.n();
  if (signed_shell_size(n, s) > 10'000'000)
    throw budget_error("brute-force shell too large to enumerate");

  long long count = 0;
  std::vector<long long> coords(n);
  auto visit_leaf = [&](int j, long long v) {
    if (region == BruteRegion::open_orthant && v == 0) return;
    coords[j] = v;
    if (residue_vanishes(params, coords)) ++count;
  };
  auto rec = [&](auto&& self, int j, long long rem) -> void {
    if (j == n - 1) {
      // last coordinate is forced up to sign
      if (region == BruteRegion::signed_lattice && rem > 0) visit_leaf(j, -rem);
      visit_leaf(j, rem);
      return;
    }
    long long lo = region == BruteRegion::signed_lattice ? -rem
                 : region == BruteRegion::open_orthant   ? 1
                                                         : 0;
    for (long long v = lo; v <= rem; ++v) {
      coords[j] = v;
      self(self, j + 1, rem - (v < 0 ? -v : v));
    }
  };
  rec(rec, 0, s);
  return count;
}

// ---------------------------------------------------------------------------
// Molien-series multiplicities with 80-digit complex arithmetic
// ---------------------------------------------------------------------------

namespace {

using hp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<80>>;

struct Cx {
  hp re, im;
  Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
  Cx operator*(const Cx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

Cx root_of_unity(long long k, long long q) {
  hp angle = 2 * boost::math::constants::pi<hp>() * k / q;
  return {cos(angle), sin(angle)};
}

// series *= 1/(1 - c z), in place: b[m] = a[m] + c * b[m-1]
void divide_by_linear(std::vector<Cx>& series, const Cx& c) {
  for (std::size_t m = 1; m < series.size(); ++m)
    series[m] = series[m] + c * series[m - 1];
}

}  // namespace

std::vector<Int> molien_multiplicity(const LensParams& params, long long s_max) {
  const long long q = params.q();
  const int n = params.n();
  if (q > 12 || n > 4 || s_max > 30)
    throw std::invalid_argument("molien oracle budget: q <= 12, n <= 4, s_max <= 30");
  if (s_max < 0) throw std::invalid_argument("negative degree bound");

  const std::size_t len = static_cast<std::size_t>(s_max) + 1;
  std::vector<Cx> total(len, Cx{0, 0});
  for (long long l = 0; l < q; ++l) {
    std::vector<Cx> series(len, Cx{0, 0});
    series[0] = {1, 0};
    for (int j = 0; j < n; ++j) {
      divide_by_linear(series, root_of_unity(l * params.p()[j] % q, q));
      divide_by_linear(series, root_of_unity(-(l * params.p()[j]) % q, q));
    }
    for (std::size_t m = 0; m < len; ++m) total[m] = total[m] + series[m];
  }

  const hp residue_cap = hp("1e-20");
  std::vector<Int> coeffs(len);
  for (std::size_t m = 0; m < len; ++m) {
    // (1 - z^2) factor and the 1/q average
    Cx c = total[m];
    if (m >= 2) c = c + Cx{-total[m - 2].re, -total[m - 2].im};
    hp re = c.re / q, im = c.im / q;
    hp nearest = round(re);
    if (abs(re - nearest) >= residue_cap || abs(im) >= residue_cap) {
      std::ostringstream os;
      os << "molien rounding residue too large at degree " << m;
      throw std::runtime_error(os.str());
    }
    coeffs[m] = Int(nearest.convert_to<long long>());
  }
  return coeffs;
}

// ---------------------------------------------------------------------------
// Harmonic dimension, re-derived
// ---------------------------------------------------------------------------

Int brute_harmonic_dim(int n, long long s, const std::vector<long long>& a) {
  if (n < 2) throw std::invalid_argument("dimension parameter must be >= 2");
  long long norm = 0;
  for (long long c : a) norm += c < 0 ? -c : c;
  // own Pascal triangle, no shared binomial code
  Int dim = 0;
  for (long long r = 0; 2 * r <= s; ++r) {
    if (s - 2 * r != norm) continue;
    std::vector<Int> row{1};
    for (long long i = 1; i <= r + n - 2; ++i) {
      std::vector<Int> next(row.size() + 1, 0);
      for (std::size_t k = 0; k < row.size(); ++k) {
        next[k] += row[k];
        next[k + 1] += row[k];
      }
      row = std::move(next);
    }
    dim += n - 2 < static_cast<long long>(row.size()) ? row[n - 2] : Int(0);
  }
  return dim;
}

}  // namespace lensharm::oracle
