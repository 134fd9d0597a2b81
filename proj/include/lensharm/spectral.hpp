#ifndef LENSHARM_SPECTRAL_HPP
#define LENSHARM_SPECTRAL_HPP

#include <vector>

#include "lensharm/lattice.hpp"

namespace lensharm {

// dim H_{s,a}: dimension of the space of harmonic homogeneous polynomials of
// degree s attached to the lattice direction a. Nonzero only when
// s - |a|_1 = 2r with integer r >= 0, in which case it equals C(r+n-2, n-2).
// Depends on a only through its l1 norm.
Int harmonic_dim(int n, long long s, const LatticePoint& a);
Int harmonic_dim_from_norm(int n, long long s, long long l1_norm);

// N(s): lattice points of l1 norm s inside the region. Orthant and signed
// regions go through the DP counter, cones through enumeration.
Int count_N(const CongruenceLattice& lattice, const ShellRegion& region,
            long long s);

// F(t) = sum_{s<=t} sum_{r<=s/2} C(r+n-2, n-2) N(s-2r), evaluated in the
// reordered form sum_r C(r+n-2, n-2) * (N(0) + ... + N(t-2r)) over cached
// prefix sums of N.
Int count_F(const CongruenceLattice& lattice, const ShellRegion& region,
            long long t);

// Exact eigenspace dimension of the Laplace-Beltrami eigenvalue s(s+2n-2) on
// the lens space: sum of harmonic_dim over the full signed lattice (finite:
// only norms <= s contribute).
Int multiplicity(const CongruenceLattice& lattice, long long s);

struct SpectrumRow {
  long long s;
  Int eigenvalue;  // s (s + 2n - 2)
  Int multiplicity;
  Int cumulative;
};

struct SpectrumTable {
  LensParams params;
  std::vector<SpectrumRow> rows;
};

SpectrumTable spectrum_table(const CongruenceLattice& lattice, long long s_max);

// Counter bundling a ShellCounter with the binomially weighted cumulative
// sums, so repeated F queries against one (lattice, region) stay cheap.
class HarmonicCounter {
 public:
  HarmonicCounter(CongruenceLattice lattice, ShellRegion region);

  Int N(long long s) { return shells_.count(s); }
  Int F(long long t);
  // multiplicity at degree s; only meaningful over the full signed region.
  Int eigenvalue_multiplicity(long long s);

  ShellCounter& shells() { return shells_; }

 private:
  Int weighted_sum(long long t, bool cumulative);
  ShellCounter shells_;
  std::vector<Int> binom_;  // C(r+n-2, n-2) cache
};

}  // namespace lensharm

#endif
