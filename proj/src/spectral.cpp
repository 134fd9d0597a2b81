#include "lensharm/spectral.hpp"

#include <stdexcept>

namespace lensharm {

Int harmonic_dim_from_norm(int n, long long s, long long l1_norm) {
  if (n < 2) throw std::invalid_argument("dimension parameter must be >= 2");
  if (s < 0 || l1_norm > s) return 0;
  long long diff = s - l1_norm;
  if (diff % 2 != 0) return 0;
  return binomial(diff / 2 + n - 2, n - 2);
}

Int harmonic_dim(int n, long long s, const LatticePoint& a) {
  return harmonic_dim_from_norm(n, s, a.l1_norm);
}

Int count_N(const CongruenceLattice& lattice, const ShellRegion& region,
            long long s) {
  if (s < 0) throw std::invalid_argument("negative shell norm");
  ShellCounter counter(lattice, region);
  return counter.count(s);
}

Int count_F(const CongruenceLattice& lattice, const ShellRegion& region,
            long long t) {
  HarmonicCounter hc(lattice, region);
  return hc.F(t);
}

Int multiplicity(const CongruenceLattice& lattice, long long s) {
  HarmonicCounter hc(lattice, ShellRegion::full_signed());
  return hc.eigenvalue_multiplicity(s);
}

SpectrumTable spectrum_table(const CongruenceLattice& lattice, long long s_max) {
  if (s_max < 0) throw std::invalid_argument("negative degree bound");
  HarmonicCounter hc(lattice, ShellRegion::full_signed());
  hc.shells().ensure(s_max);
  const long long c = 2 * lattice.n() - 2;
  SpectrumTable table{lattice.params(), {}};
  table.rows.reserve(s_max + 1);
  Int cumulative = 0;
  for (long long s = 0; s <= s_max; ++s) {
    Int m = hc.eigenvalue_multiplicity(s);
    cumulative += m;
    table.rows.push_back({s, Int(s) * (s + c), std::move(m), cumulative});
  }
  return table;
}

HarmonicCounter::HarmonicCounter(CongruenceLattice lattice, ShellRegion region)
    : shells_(std::move(lattice), std::move(region)) {}

Int HarmonicCounter::weighted_sum(long long t, bool cumulative) {
  if (t < 0) return 0;
  const int n = shells_.lattice().n();
  shells_.ensure(t);
  while (static_cast<long long>(binom_.size()) <= t / 2)
    binom_.push_back(binomial(static_cast<long long>(binom_.size()) + n - 2, n - 2));
  Int total = 0;
  for (long long r = 0; 2 * r <= t; ++r)
    total += binom_[r] * (cumulative ? shells_.cumulative(t - 2 * r)
                                     : shells_.count(t - 2 * r));
  return total;
}

Int HarmonicCounter::F(long long t) {
  if (t < 0) throw std::invalid_argument("negative truncation parameter");
  return weighted_sum(t, /*cumulative=*/true);
}

Int HarmonicCounter::eigenvalue_multiplicity(long long s) {
  if (s < 0) throw std::invalid_argument("negative degree");
  return weighted_sum(s, /*cumulative=*/false);
}

}  // namespace lensharm
