#ifndef LENSHARM_LATTICE_HPP
#define LENSHARM_LATTICE_HPP

#include <vector>

#include "lensharm/cone.hpp"
#include "lensharm/lens_params.hpp"
#include "lensharm/numeric.hpp"
#include "lensharm/point.hpp"

namespace lensharm {

// Congruence lattice T = {a in Z^n : sum a_j p_j = 0 mod q}, an index-q
// sublattice of Z^n. The stored basis matrix has the lattice generators as
// columns and is kept in Hermite normal form (upper triangular, positive
// diagonal, entries right of the diagonal reduced into [0, diag)), so equal
// lattices always carry identical matrices.
class CongruenceLattice {
 public:
  const LensParams& params() const { return params_; }
  long long q() const { return params_.q(); }
  int n() const { return params_.n(); }

  // basis()[i][j] = entry in row i, column j; columns generate the lattice.
  const std::vector<std::vector<long long>>& basis() const { return basis_; }

  // det of the basis; always +q in Hermite form.
  long long det() const;

  // sum a_j p_j = 0 mod q. Throws on dimension mismatch.
  bool contains(const LatticePoint& point) const;

  bool operator==(const CongruenceLattice& o) const {
    return params_.q() == o.params_.q() && basis_ == o.basis_;
  }

 private:
  friend CongruenceLattice build_lattice(const LensParams&);
  CongruenceLattice(LensParams params, std::vector<std::vector<long long>> b)
      : params_(std::move(params)), basis_(std::move(b)) {}

  LensParams params_;
  std::vector<std::vector<long long>> basis_;
};

CongruenceLattice build_lattice(const LensParams& params);

// Region of Z^n a shell query ranges over.
enum class RegionKind { full_signed, closed_orthant, open_orthant, cone };

// The cone variant holds one or more simplicial cones in the closed positive
// orthant; a union counts points lying in any member, so lattice points on a
// shared boundary facet are never counted twice.
class ShellRegion {
 public:
  static ShellRegion full_signed() { return ShellRegion(RegionKind::full_signed); }
  static ShellRegion closed_orthant() { return ShellRegion(RegionKind::closed_orthant); }
  static ShellRegion open_orthant() { return ShellRegion(RegionKind::open_orthant); }
  static ShellRegion cone(SimplicialCone c);
  static ShellRegion cone_union(std::vector<SimplicialCone> cs);

  RegionKind kind() const { return kind_; }
  const std::vector<SimplicialCone>& cones() const { return cones_; }

  bool orthant_dp_supported() const { return kind_ != RegionKind::cone; }
  bool contains(const LatticePoint& p) const;  // geometric part only

 private:
  explicit ShellRegion(RegionKind k) : kind_(k) {}
  RegionKind kind_;
  std::vector<SimplicialCone> cones_;
};

// Points of the lattice in the region with l1 norm exactly s, in lexicographic
// order. Enumerates candidates and filters, so output order is reproducible.
std::vector<LatticePoint> shell_points(const CongruenceLattice& lattice,
                                       const ShellRegion& region, long long s);

// N(s) for the orthant and signed regions without enumeration: dynamic
// programming over coordinates on the state (l1 budget, residue of the
// partial sum a_j p_j mod q), O(n q s) for the whole table up to s. Cone
// regions are rejected (they go through the enumeration path).
Int shell_count_fast(const CongruenceLattice& lattice,
                     const ShellRegion& region, long long s);

// N(s) for one shell by direct enumeration, any region. Shells at distinct
// norms are independent, which is what the parallel sampling loops rely on.
Int shell_count_enumerated(const CongruenceLattice& lattice,
                           const ShellRegion& region, long long s);

// Per-(lattice, region) shell counter with cached per-shell counts and prefix
// sums. DP regions fill the whole table in one sweep; cone regions enumerate
// shell by shell. Not synchronized: share across threads only read-only after
// warming, or give each worker its own counter.
class ShellCounter {
 public:
  ShellCounter(CongruenceLattice lattice, ShellRegion region);

  const CongruenceLattice& lattice() const { return lattice_; }
  const ShellRegion& region() const { return region_; }

  const Int& count(long long s);       // N(s)
  const Int& cumulative(long long s);  // N(0) + ... + N(s)
  void ensure(long long s_max);

  // Estimated elementary operations to extend the table to s_max; used by
  // callers enforcing a work budget before committing to a computation.
  long double work_estimate(long long s_max) const;

 private:
  void compute_dp(long long s_max);
  void compute_enumerated(long long s_max);

  CongruenceLattice lattice_;
  ShellRegion region_;
  std::vector<Int> counts_;
  std::vector<Int> prefix_;
  long long computed_ = -1;
  Int zero_ = 0;
};

}  // namespace lensharm

#endif
