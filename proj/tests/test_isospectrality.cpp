#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lensharm/isospectrality.hpp"

using namespace lensharm;

namespace {

LensParams random_params(std::mt19937& rng, int n_max, long long q_max) {
  int n = 2 + static_cast<int>(rng() % (n_max - 1));
  long long q = 1 + static_cast<long long>(rng() % q_max);
  std::vector<long long> p(n);
  for (auto& x : p)
    do {
      x = static_cast<long long>(rng() % q);
    } while (gcd_ll(x, q) != 1);
  return LensParams(q, p);
}

}  // namespace

TEST_CASE("shell profile fixtures") {
  auto z2 = shell_profile(build_lattice(LensParams(1, {0, 0})), 2);
  CHECK(z2.counts == std::vector<Int>{1, 4, 8});

  auto l2 = shell_profile(build_lattice(LensParams(2, {1, 1})), 2);
  CHECK(l2.counts == std::vector<Int>{1, 0, 8});

  auto l7 = shell_profile(build_lattice(LensParams(7, {1, 2})), 1);
  CHECK(l7.counts == std::vector<Int>{1, 0});
}

TEST_CASE("isospectral verdicts") {
  LensParams a(7, {1, 1}), b(7, {1, 2});
  auto same = isospectral(a, a, 10);
  CHECK(same.isospectral_up_to_depth);
  CHECK_FALSE(same.first_differing_shell.has_value());

  auto diff = isospectral(a, b, 5);
  CHECK_FALSE(diff.isospectral_up_to_depth);
  REQUIRE(diff.first_differing_shell.has_value());
  CHECK(*diff.first_differing_shell == 2);

  // unit multiple of the tuple defines the same congruence lattice
  auto unit = isospectral(LensParams(5, {1, 2}), LensParams(5, {2, 4}), 40);
  CHECK(unit.isospectral_up_to_depth);
  CHECK(build_lattice(LensParams(5, {1, 2})) ==
        build_lattice(LensParams(5, {2, 4})));

  CHECK_THROWS_AS(isospectral(a, LensParams(7, {1, 1, 1}), 5),
                  std::invalid_argument);
}

TEST_CASE("multiplicity crosscheck equals the shell criterion") {
  CHECK(multiplicity_crosscheck(LensParams(7, {1, 1}), LensParams(7, {1, 1}), 10));
  CHECK_FALSE(
      multiplicity_crosscheck(LensParams(7, {1, 1}), LensParams(7, {1, 2}), 4));

  std::mt19937 rng(1221);
  for (int it = 0; it < 30; ++it) {
    LensParams a = random_params(rng, 3, 15);
    std::vector<long long> p2(a.p());
    // perturb some entries, keeping them units
    for (auto& x : p2) {
      if (rng() % 2 == 0) continue;
      do {
        x = static_cast<long long>(rng() % a.q());
      } while (gcd_ll(x, a.q()) != 1);
    }
    LensParams b(a.q(), p2);
    long long depth = 2 + static_cast<long long>(rng() % 24);
    CHECK(multiplicity_crosscheck(a, b, depth) ==
          isospectral(a, b, depth).isospectral_up_to_depth);
  }
}

TEST_CASE("isometry canonicalization fixtures") {
  CHECK(canonicalize_isometry(LensParams(5, {2, 4})) ==
        canonicalize_isometry(LensParams(5, {1, 2})));
  CHECK(canonicalize_isometry(LensParams(7, {1, 6})) ==
        canonicalize_isometry(LensParams(7, {1, 1})));
  CHECK_FALSE(canonicalize_isometry(LensParams(7, {1, 2})) ==
              canonicalize_isometry(LensParams(7, {1, 1})));
  // idempotence
  auto cls = canonicalize_isometry(LensParams(11, {3, 9, 5}));
  CHECK(canonicalize_isometry(LensParams(11, cls.rep)).rep == cls.rep);
}

TEST_CASE("isometric tuples share shell profiles") {
  std::mt19937 rng(8181);
  for (int it = 0; it < 20; ++it) {
    LensParams a = random_params(rng, 4, 12);
    const long long q = a.q();
    // random orbit move: unit multiple, sign flips, permutation
    long long l;
    do {
      l = 1 + static_cast<long long>(rng() % q);
    } while (gcd_ll(l, q) != 1);
    std::vector<long long> p2(a.p());
    for (auto& x : p2) {
      x = mul_mod(x, l, q);
      if (rng() % 2) x = (q - x) % q;
    }
    std::shuffle(p2.begin(), p2.end(), rng);
    LensParams b(q, p2);
    CHECK(canonicalize_isometry(a) == canonicalize_isometry(b));
    CHECK(isospectral(a, b, 2 * q + 5).isospectral_up_to_depth);
  }
}

TEST_CASE("profiles invariant under permutation and entry negation") {
  LensParams a(9, {1, 2, 4});
  LensParams perm(9, {4, 1, 2});
  LensParams neg(9, {8, 2, 4});  // 8 = 9 - 1
  auto pa = shell_profile(build_lattice(a), 20).counts;
  CHECK(pa == shell_profile(build_lattice(perm), 20).counts);
  CHECK(pa == shell_profile(build_lattice(neg), 20).counts);
}

TEST_CASE("class representatives are canonical and exhaustive") {
  auto reps = isometry_class_representatives(2, 7);
  for (const auto& r : reps)
    CHECK(canonicalize_isometry(r).rep == r.p());
  // every valid tuple canonicalizes onto exactly one listed representative
  std::set<std::vector<long long>> listed;
  for (const auto& r : reps) listed.insert(r.p());
  for (long long p1 = 1; p1 < 7; ++p1)
    for (long long p2 = 1; p2 < 7; ++p2)
      CHECK(listed.count(canonicalize_isometry(LensParams(7, {p1, p2})).rep) == 1);
}

TEST_CASE("two-dimensional search up to q = 20 finds no cross-class pair") {
  auto pairs = search_pairs(2, 1, 20, {.verify_smax = 40});
  CHECK(pairs.empty());
}

TEST_CASE("search result lines serialize as json") {
  IsospectralPair pair{11, {1, 2, 3}, {1, 2, 4}, 60, {1, 0, 2}};
  auto line = pair_to_json_line(pair);
  CHECK(line.find("\"q\":11") != std::string::npos);
  CHECK(line.find("\"p1\":[1,2,3]") != std::string::npos);
  CHECK(line.find("\"verified_depth\":60") != std::string::npos);
}
