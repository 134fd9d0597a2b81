#ifndef LENSHARM_ISOSPECTRALITY_HPP
#define LENSHARM_ISOSPECTRALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lensharm/spectral.hpp"

namespace lensharm {

// Per-shell point counts of the full signed lattice, k = 0..K. Two lens
// spaces are isospectral exactly when these cardinalities agree at every k;
// matching counts per l1 ball is equivalent to matching counts per shell.
struct ShellProfile {
  LensParams params;
  std::vector<Int> counts;
};

ShellProfile shell_profile(const CongruenceLattice& lattice, long long K);

struct IsospecVerdict {
  bool isospectral_up_to_depth = false;
  long long depth = 0;
  std::optional<long long> first_differing_shell;
};

// Compare shell profiles of the two parameter tuples up to norm K.
IsospecVerdict isospectral(const LensParams& a, const LensParams& b, long long K);

// Compare multiplicity tables for all s <= s_max. The binomial convolution
// tying multiplicities to shell counts is unitriangular, so this must agree
// with the shell-profile comparison at the same depth; a disagreement marks
// an implementation bug and throws std::logic_error.
bool multiplicity_crosscheck(const LensParams& a, const LensParams& b,
                             long long s_max);

// Isometry class of a parameter tuple: orbit under permutations, per-entry
// sign flips p_j -> q - p_j, and multiplication by a unit mod q. The stored
// representative is the lexicographic minimum of the orbit with entries
// folded to min(x, q - x); canonicalization is idempotent.
struct IsometryClass {
  long long q = 1;
  std::vector<long long> rep;

  bool operator==(const IsometryClass&) const = default;
  auto operator<=>(const IsometryClass&) const = default;
  std::string to_string() const;
};

IsometryClass canonicalize_isometry(const LensParams& params);

struct IsospectralPair {
  long long q = 1;
  std::vector<long long> p1, p2;
  long long verified_depth = 0;
  std::vector<Int> profile_prefix;
};

struct SearchOptions {
  long long depth = 0;        // 0: auto, 2q per modulus
  long long verify_smax = 60; // re-verification depth for emitted pairs
  unsigned workers = 1;
};

// Enumerate isometry-class representatives for every q in [q_min, q_max],
// bucket them by shell profile, and emit cross-class collisions re-verified
// via multiplicity tables. Only same-q pairs can collide: the total measure
// scales as 1/q, so profiles at different q diverge. Output is sorted by
// (q, p1, p2) and independent of the worker count.
std::vector<IsospectralPair> search_pairs(int n, long long q_min,
                                          long long q_max,
                                          const SearchOptions& opts = {});

// All class representatives for a given (n, q); exposed for tests and search.
std::vector<LensParams> isometry_class_representatives(int n, long long q);

std::string pair_to_json_line(const IsospectralPair& pair);

}  // namespace lensharm

#endif
