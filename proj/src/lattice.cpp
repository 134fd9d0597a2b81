#include "lensharm/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace lensharm {

// ---------------------------------------------------------------------------
// Basis construction. Starting matrix: columns q*e_1 and, for j >= 2,
// e_j - c_j*e_1 with c_j = p_j * p_1^{-1} mod q. Each column's coordinate sum
// against p vanishes mod q and the determinant is +-q, so the columns generate
// the full congruence lattice (index q in Z^n). The matrix is then reduced to
// Hermite normal form, which is unique, making construction canonical.
// ---------------------------------------------------------------------------

namespace {

// Column-operation Hermite normal form: upper triangular, positive diagonal,
// entries right of the diagonal reduced into [0, diag). Columns remain
// generators of the same lattice throughout (unimodular column ops only).
void hermite_normalize(std::vector<std::vector<Int>>& m) {
  const int n = static_cast<int>(m.size());
  auto col_sub = [&](int dst, int src, const Int& t) {
    for (int r = 0; r < n; ++r) m[r][dst] -= t * m[r][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < n; ++r) std::swap(m[r][a], m[r][b]);
  };
  auto col_negate = [&](int c) {
    for (int r = 0; r < n; ++r) m[r][c] = -m[r][c];
  };

  // Triangularize bottom row upward; step i works inside columns 0..i, which
  // already have zeros in rows > i, so those zeros are preserved.
  for (int i = n - 1; i >= 0; --i) {
    for (;;) {
      int piv = -1;
      for (int j = 0; j <= i; ++j) {
        if (m[i][j] != 0 && (piv < 0 || abs(m[i][j]) < abs(m[i][piv])))
          piv = j;
      }
      if (piv < 0) throw std::logic_error("singular basis candidate");
      if (piv != i) col_swap(piv, i);
      bool cleared = true;
      for (int j = 0; j < i; ++j) {
        if (m[i][j] == 0) continue;
        col_sub(j, i, m[i][j] / m[i][i]);  // truncating division shrinks |entry|
        if (m[i][j] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m[i][i] < 0) col_negate(i);
  }

  // Reduce entries right of each pivot into [0, diag). Working from the
  // bottom pivot upward only ever touches rows above the ones already done.
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      Int t = m[i][j] / m[i][i];
      if (m[i][j] - t * m[i][i] < 0) t -= 1;  // floor division
      if (t != 0) col_sub(j, i, t);
    }
  }
}

}  // namespace

CongruenceLattice build_lattice(const LensParams& params) {
  const int n = params.n();
  const long long q = params.q();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  if (q == 1) {
    for (int i = 0; i < n; ++i) m[i][i] = 1;
  } else {
    long long inv = mod_inverse(params.p()[0], q);
    m[0][0] = q;
    for (int j = 1; j < n; ++j) {
      m[0][j] = -mul_mod(params.p()[j], inv, q);
      m[j][j] = 1;
    }
    hermite_normalize(m);
  }
  std::vector<std::vector<long long>> b(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = m[i][j].convert_to<long long>();
  return CongruenceLattice(params, std::move(b));
}

long long CongruenceLattice::det() const {
  long long d = 1;
  for (int i = 0; i < n(); ++i) d *= basis_[i][i];
  return d;
}

bool CongruenceLattice::contains(const LatticePoint& point) const {
  if (static_cast<int>(point.coords.size()) != n())
    throw std::invalid_argument("point dimension does not match lattice");
  long long acc = 0;
  for (int j = 0; j < n(); ++j)
    acc = (acc + mul_mod(point.coords[j], params_.p()[j], q())) % q();
  return acc == 0;
}

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

ShellRegion ShellRegion::cone(SimplicialCone c) {
  ShellRegion r(RegionKind::cone);
  r.cones_.push_back(std::move(c));
  return r;
}

ShellRegion ShellRegion::cone_union(std::vector<SimplicialCone> cs) {
  if (cs.empty()) throw std::invalid_argument("empty cone union");
  for (const auto& c : cs)
    if (c.n() != cs.front().n())
      throw std::invalid_argument("cones in a union must share a dimension");
  ShellRegion r(RegionKind::cone);
  r.cones_ = std::move(cs);
  return r;
}

bool ShellRegion::contains(const LatticePoint& p) const {
  switch (kind_) {
    case RegionKind::full_signed:
      return true;
    case RegionKind::closed_orthant:
      for (long long c : p.coords)
        if (c < 0) return false;
      return true;
    case RegionKind::open_orthant:
      for (long long c : p.coords)
        if (c <= 0) return false;
      return true;
    case RegionKind::cone:
      for (const auto& cone : cones_)
        if (cone_contains(cone, p)) return true;
      return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

template <typename Fn>
void for_each_shell_point(int n, long long s, RegionKind kind, Fn&& fn) {
  std::vector<long long> coords(n);
  // Recursive generation in increasing coordinate order gives lexicographic
  // output. The last coordinate is forced by the remaining budget.
  auto rec = [&](auto&& self, int j, long long rem) -> void {
    if (j == n - 1) {
      if (kind == RegionKind::full_signed) {
        if (rem > 0) {
          coords[j] = -rem;
          fn(coords);
        }
        coords[j] = rem;
        fn(coords);
      } else {
        if (kind == RegionKind::open_orthant && rem <= 0) return;
        coords[j] = rem;
        fn(coords);
      }
      return;
    }
    long long lo = kind == RegionKind::full_signed ? -rem
                 : kind == RegionKind::open_orthant ? 1
                                                    : 0;
    for (long long v = lo; v <= rem; ++v) {
      long long used = v < 0 ? -v : v;
      if (kind == RegionKind::open_orthant && rem - used < n - 1 - j) break;
      coords[j] = v;
      self(self, j + 1, rem - used);
    }
  };
  if (kind == RegionKind::open_orthant && s < n) return;
  rec(rec, 0, s);
}

// Cone candidates live in the closed positive orthant.
RegionKind enumeration_kind(const ShellRegion& region) {
  return region.kind() == RegionKind::cone ? RegionKind::closed_orthant
                                           : region.kind();
}

}  // namespace

std::vector<LatticePoint> shell_points(const CongruenceLattice& lattice,
                                       const ShellRegion& region, long long s) {
  if (s < 0) throw std::invalid_argument("negative shell norm");
  std::vector<LatticePoint> out;
  for_each_shell_point(
      lattice.n(), s, enumeration_kind(region),
      [&](const std::vector<long long>& coords) {
        LatticePoint p = make_point(coords);
        if (!lattice.contains(p)) return;
        if (region.kind() == RegionKind::cone && !region.contains(p)) return;
        out.push_back(std::move(p));
      });
  return out;
}

// ---------------------------------------------------------------------------
// Dynamic programming counter
//
// State after handling coordinates 1..j: D_j(b, m) = number of prefixes with
// l1 norm b and residue m = sum a_i p_i mod q. Adding coordinate j with value
// v costs |v| budget and shifts the residue by v p_j. The geometric tails
//
//   Gp(b, m) = sum_{w>=1} D_{j-1}(b - w, m - w p_j)
//   Gm(b, m) = sum_{w>=1} D_{j-1}(b - w, m + w p_j)
//
// satisfy Gp(b, m) = D_{j-1}(b-1, m-p_j) + Gp(b-1, m-p_j) (same for Gm with
// the opposite shift), so each state is O(1) and one pass costs O(q s).
//   signed:         D_j = D_{j-1} + Gp + Gm
//   closed orthant: D_j = D_{j-1} + Gp
//   open orthant:   D_j = Gp
// ---------------------------------------------------------------------------

ShellCounter::ShellCounter(CongruenceLattice lattice, ShellRegion region)
    : lattice_(std::move(lattice)), region_(std::move(region)) {}

namespace {

// Overflow-checked accumulation: the sweep runs on unsigned 64-bit counts
// and falls back to arbitrary precision when a count outgrows them.
inline bool checked_add(unsigned long long& dst, unsigned long long a) {
  return !__builtin_add_overflow(dst, a, &dst);
}
inline bool checked_add(Int& dst, const Int& a) {
  dst += a;
  return true;
}

template <typename Count>
bool dp_sweep(const CongruenceLattice& lattice, RegionKind kind,
              long long s_max, std::vector<Count>& final_counts) {
  const int n = lattice.n();
  const long long q = lattice.q();
  const std::size_t states = static_cast<std::size_t>(s_max + 1) * q;
  std::vector<Count> d(states, Count(0)), nd(states, Count(0));
  std::vector<Count> gp(states, Count(0)), gm;
  d[0] = 1;
  const bool is_signed = kind == RegionKind::full_signed;
  const bool open = kind == RegionKind::open_orthant;
  if (is_signed) gm.assign(states, Count(0));

  for (int j = 0; j < n; ++j) {
    const long long pj = lattice.params().p()[j] % q;
    // residue shift tables avoid a modulo in the inner loop
    std::vector<std::size_t> minus(q), plus(q);
    for (long long m = 0; m < q; ++m) {
      minus[m] = static_cast<std::size_t>(m - pj < 0 ? m - pj + q : m - pj);
      plus[m] = static_cast<std::size_t>(m + pj >= q ? m + pj - q : m + pj);
    }
    for (long long m = 0; m < q; ++m) {
      gp[m] = 0;
      if (is_signed) gm[m] = 0;
    }
    for (long long b = 0; b <= s_max; ++b) {
      const std::size_t row = static_cast<std::size_t>(b) * q;
      const std::size_t prev = row - q;
      for (long long m = 0; m < q; ++m) {
        const std::size_t idx = row + m;
        if (b > 0) {
          const std::size_t up = prev + minus[m];
          gp[idx] = d[up];
          if (!checked_add(gp[idx], gp[up])) return false;
          if (is_signed) {
            const std::size_t um = prev + plus[m];
            gm[idx] = d[um];
            if (!checked_add(gm[idx], gm[um])) return false;
          }
        }
        if (open) {
          nd[idx] = gp[idx];
        } else {
          nd[idx] = d[idx];
          if (!checked_add(nd[idx], gp[idx])) return false;
          if (is_signed && !checked_add(nd[idx], gm[idx])) return false;
        }
      }
    }
    d.swap(nd);
  }

  final_counts.resize(s_max + 1);
  for (long long s = 0; s <= s_max; ++s)
    final_counts[s] = d[static_cast<std::size_t>(s) * q];
  return true;
}

}  // namespace

void ShellCounter::compute_dp(long long s_max) {
  counts_.clear();
  std::vector<unsigned long long> fast;
  if (dp_sweep(lattice_, region_.kind(), s_max, fast)) {
    counts_.assign(fast.begin(), fast.end());
  } else {
    dp_sweep(lattice_, region_.kind(), s_max, counts_);
  }
  prefix_.resize(s_max + 1);
  Int run = 0;
  for (long long s = 0; s <= s_max; ++s) {
    run += counts_[s];
    prefix_[s] = run;
  }
  computed_ = s_max;
}

void ShellCounter::compute_enumerated(long long s_max) {
  counts_.resize(s_max + 1);
  prefix_.resize(s_max + 1);
  for (long long s = computed_ + 1; s <= s_max; ++s) {
    counts_[s] = shell_count_enumerated(lattice_, region_, s);
    prefix_[s] = s == 0 ? counts_[0] : prefix_[s - 1] + counts_[s];
  }
  computed_ = s_max;
}

void ShellCounter::ensure(long long s_max) {
  if (s_max <= computed_) return;
  if (region_.orthant_dp_supported())
    compute_dp(s_max);  // full rebuild: one sweep is O(n q s) anyway
  else
    compute_enumerated(s_max);
}

const Int& ShellCounter::count(long long s) {
  if (s < 0) return zero_;
  ensure(s);
  return counts_[s];
}

const Int& ShellCounter::cumulative(long long s) {
  if (s < 0) return zero_;
  ensure(s);
  return prefix_[s];
}

long double ShellCounter::work_estimate(long long s_max) const {
  const int n = lattice_.n();
  if (region_.orthant_dp_supported())
    return static_cast<long double>(n) * lattice_.q() * (s_max + 1);
  // enumeration visits every composition of every shell below s_max, and
  // each candidate pays an exact n x n solve per cone
  long double candidates = 1;
  for (int k = 1; k <= n; ++k)
    candidates *= static_cast<long double>(s_max + k) / k;  // C(s_max + n, n)
  long double solve_cost = static_cast<long double>(n) * n * n;
  return candidates * solve_cost * region_.cones().size();
}

Int shell_count_fast(const CongruenceLattice& lattice,
                     const ShellRegion& region, long long s) {
  if (s < 0) throw std::invalid_argument("negative shell norm");
  if (!region.orthant_dp_supported())
    throw std::invalid_argument(
        "cone regions are counted by enumeration, not the DP counter");
  ShellCounter counter(lattice, region);
  return counter.count(s);
}

Int shell_count_enumerated(const CongruenceLattice& lattice,
                           const ShellRegion& region, long long s) {
  if (s < 0) throw std::invalid_argument("negative shell norm");
  Int c = 0;
  for_each_shell_point(lattice.n(), s, enumeration_kind(region),
                       [&](const std::vector<long long>& coords) {
                         LatticePoint p = make_point(coords);
                         if (lattice.contains(p) && region.contains(p)) ++c;
                       });
  return c;
}

}  // namespace lensharm
