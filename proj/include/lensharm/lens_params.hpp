#ifndef LENSHARM_LENS_PARAMS_HPP
#define LENSHARM_LENS_PARAMS_HPP

#include <string>
#include <vector>

namespace lensharm {

// Parameter tuple (q; p_1,...,p_n) of a lens space S^{2n-1}/Z_q and of its
// congruence lattice {a in Z^n : sum a_j p_j = 0 mod q}.
//
// Entries are reduced to the canonical range [1, q-1] on construction (all
// zero when q = 1); each p_j must be a unit mod q so that the cyclic group
// action is free. n >= 2 throughout.
class LensParams {
 public:
  LensParams(long long q, std::vector<long long> p);

  long long q() const { return q_; }
  int n() const { return static_cast<int>(p_.size()); }
  const std::vector<long long>& p() const { return p_; }

  bool operator==(const LensParams&) const = default;
  auto operator<=>(const LensParams&) const = default;

  // "(q; p1,p2,...)"
  std::string to_string() const;

 private:
  long long q_;
  std::vector<long long> p_;
};

}  // namespace lensharm

#endif
