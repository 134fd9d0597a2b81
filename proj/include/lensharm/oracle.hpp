#ifndef LENSHARM_ORACLE_HPP
#define LENSHARM_ORACLE_HPP

#include <vector>

#include "lensharm/lens_params.hpp"
#include "lensharm/numeric.hpp"

// Independent slow reference implementations used to pin test fixtures and to
// property-test the fast paths. Everything here re-derives its result
// definitionally and shares no algorithmic code with the library modules:
// its own enumeration, its own binomials, its own series arithmetic.
namespace lensharm::oracle {

enum class BruteRegion { signed_lattice, closed_orthant, open_orthant };

// Number of lattice points of l1 norm exactly s in the region, by exhaustive
// enumeration of every candidate vector. Guarded: throws budget_error when
// the shell has more than 10^7 candidates.
long long brute_shell_count(const LensParams& params, BruteRegion region,
                            long long s);

// Eigenvalue multiplicities for degrees 0..s_max from the invariant-theory
// generating function
//   (1 - z^2) (1/q) sum_{l=0}^{q-1} prod_j 1/((1 - z w^{l p_j})(1 - z w^{-l p_j})),
// w = exp(2 pi i / q), expanded with 80-digit complex floats. Coefficients
// are rounded to the nearest integer and the rounding residue must stay
// below 1e-20, otherwise a runtime_error reports the precision failure.
// Budget preconditions: q <= 12, n <= 4, s_max <= 30.
std::vector<Int> molien_multiplicity(const LensParams& params, long long s_max);

// Literal re-evaluation of the harmonic dimension case split with its own
// Pascal-triangle binomials.
Int brute_harmonic_dim(int n, long long s, const std::vector<long long>& a);

}  // namespace lensharm::oracle

#endif
