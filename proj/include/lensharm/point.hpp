#ifndef LENSHARM_POINT_HPP
#define LENSHARM_POINT_HPP

#include <compare>
#include <cstdlib>
#include <vector>

namespace lensharm {

// Integer vector with its l1 norm cached alongside.
struct LatticePoint {
  std::vector<long long> coords;
  long long l1_norm = 0;

  bool operator==(const LatticePoint& o) const { return coords == o.coords; }
  // Lexicographic on coordinates; the cached norm never participates.
  auto operator<=>(const LatticePoint& o) const { return coords <=> o.coords; }
};

inline LatticePoint make_point(std::vector<long long> coords) {
  LatticePoint p{std::move(coords), 0};
  for (long long c : p.coords) p.l1_norm += c < 0 ? -c : c;
  return p;
}

}  // namespace lensharm

#endif
