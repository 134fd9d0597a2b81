#ifndef LENSHARM_CONE_HPP
#define LENSHARM_CONE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lensharm/numeric.hpp"
#include "lensharm/point.hpp"

namespace lensharm {

// Simplicial cone spanned by n linearly independent rays with nonnegative
// coordinates, so the cone sits inside the closed positive orthant. Rays are
// stored as primitive integer vectors; every operation on the cone is
// invariant under positive rescaling of rays, so nothing is lost.
class SimplicialCone {
 public:
  // Throws std::invalid_argument on a ray with a negative coordinate, a zero
  // ray, a dimension mismatch, or linearly dependent rays.
  explicit SimplicialCone(const std::vector<std::vector<Rat>>& rays);

  int n() const { return static_cast<int>(rays_.size()); }
  const std::vector<std::vector<Int>>& rays() const { return rays_; }

  // True when the rays are the standard basis vectors up to scaling and
  // order, i.e. the cone is the whole closed positive orthant.
  bool is_positive_orthant() const;

  // Adjugate of the ray-column matrix R and the sign of det R, cached so
  // integer membership tests are pure integer arithmetic: the solution of
  // R lambda = x is adj(R) x / det R, so lambda_i >= 0 exactly when
  // (adj(R) x)_i carries the sign of the determinant.
  const std::vector<std::vector<Int>>& adjugate() const { return adjugate_; }
  int det_sign() const { return det_sign_; }

  bool operator==(const SimplicialCone& o) const { return rays_ == o.rays_; }

 private:
  std::vector<std::vector<Int>> rays_;  // rays_[i] = i-th ray, length n
  std::vector<std::vector<Int>> adjugate_;
  int det_sign_ = 1;
};

// The whole closed positive orthant as a cone (rays e_1,...,e_n).
SimplicialCone positive_orthant_cone(int n);

// Barycentric coordinates of x in the ray basis (exact solve of R lambda = x),
// or nullopt is never returned: the system is always solvable since rays are
// independent.
std::vector<Rat> cone_coordinates(const SimplicialCone& cone,
                                  const std::vector<Rat>& x);

// Membership: x = sum lambda_i ray_i with every lambda_i >= 0. The origin is
// always contained.
bool cone_contains(const SimplicialCone& cone, const LatticePoint& point);
bool cone_contains(const SimplicialCone& cone, const std::vector<Rat>& x);

// Vol(cone /\ B_l1(0,1)) = |det(v_1,...,v_n)| / n! where v_i is ray_i scaled
// to coordinate sum 1. Exact rational.
Rat section_volume(const SimplicialCone& cone);

// One of the 2^n coordinate orthants, as a sign pattern.
struct OrthantSignature {
  std::vector<int> signs;  // entries +1 / -1

  explicit OrthantSignature(std::vector<int> s);
  int n() const { return static_cast<int>(signs.size()); }
};

// All 2^n signatures in lexicographic order, (+1,...,+1) first.
std::vector<OrthantSignature> all_orthants(int n);

// Realization of an orthant as a cone: rays sign_j * e_j, carried as the
// positive-orthant representative plus the reflection that maps the orthant
// onto it. Counting in the orthant happens through reflect().
struct OrthantCone {
  OrthantSignature signature;
  SimplicialCone positive_representative;

  // The literal rays sign_j * e_j.
  std::vector<std::vector<Int>> signed_rays() const;
  LatticePoint reflect(const LatticePoint& p) const;
};

OrthantCone orthant_cone(const OrthantSignature& sig);

// Parses the cone text format: one ray per line, comma-separated integers or
// rationals ("1,1" / "1/2,3"). Blank lines and lines starting with '#' are
// skipped. Throws std::invalid_argument on malformed input.
SimplicialCone parse_cone_text(const std::string& text);
std::string cone_to_text(const SimplicialCone& cone);

}  // namespace lensharm

#endif
