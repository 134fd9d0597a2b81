#include <doctest.h>

#include <random>

#include "lensharm/cone.hpp"
#include "lensharm/lattice.hpp"
#include "lensharm/measures.hpp"

using namespace lensharm;

namespace {

SimplicialCone make_cone(std::vector<std::vector<long long>> rays) {
  std::vector<std::vector<Rat>> r(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (long long c : rays[i]) r[i].push_back(Rat(c));
  return SimplicialCone(r);
}

}  // namespace

TEST_CASE("cone validation") {
  CHECK_THROWS_AS(make_cone({{1, 0}, {2, 0}}), std::invalid_argument);  // dependent
  CHECK_THROWS_AS(make_cone({{0, 0}, {0, 1}}), std::invalid_argument);  // zero ray
  CHECK_THROWS_AS(SimplicialCone({{Rat(-1), Rat(0)}, {Rat(0), Rat(1)}}),
                  std::invalid_argument);  // negative coordinate
  CHECK_THROWS_AS(make_cone({{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("cone membership fixtures") {
  auto orthant = positive_orthant_cone(3);
  CHECK(cone_contains(orthant, make_point({2, 5, 1})));
  CHECK(cone_contains(orthant, make_point({0, 0, 0})));

  auto cone = make_cone({{1, 1}, {0, 1}});
  CHECK_FALSE(cone_contains(cone, make_point({2, 1})));  // lambda = (2, -1)
  CHECK(cone_contains(cone, make_point({1, 2})));        // lambda = (1, 1)
  CHECK(cone_contains(cone, make_point({0, 0})));
}

TEST_CASE("cone membership agrees with sampled conic combinations") {
  std::mt19937 rng(77);
  auto draw = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % (hi - lo + 1));
  };
  for (int it = 0; it < 1000; ++it) {
    int n = static_cast<int>(draw(2, 4));
    // random independent nonnegative rays (retry until independent)
    SimplicialCone cone = positive_orthant_cone(n);
    for (;;) {
      std::vector<std::vector<Rat>> rays(n, std::vector<Rat>(n));
      for (auto& ray : rays)
        for (auto& c : ray) c = Rat(draw(0, 5));
      try {
        cone = SimplicialCone(rays);
        break;
      } catch (const std::invalid_argument&) {
      }
    }
    // a point built from known coefficients: membership is the sign pattern
    std::vector<Rat> lambda(n), x(n, Rat(0));
    bool all_nonneg = true;
    for (int i = 0; i < n; ++i) {
      lambda[i] = Rat(draw(-4, 8), draw(1, 3));
      if (lambda[i] < 0) all_nonneg = false;
      for (int j = 0; j < n; ++j) x[j] += lambda[i] * Rat(cone.rays()[i][j]);
    }
    CHECK(cone_contains(cone, x) == all_nonneg);

    // integer points must agree across both membership routes: the cached
    // adjugate signs and the exact rational solve
    std::vector<long long> pt(n);
    for (auto& c : pt) c = draw(-6, 6);
    LatticePoint lp = make_point(pt);
    std::vector<Rat> lpr(n);
    for (int j = 0; j < n; ++j) lpr[j] = Rat(pt[j]);
    CHECK(cone_contains(cone, lp) == cone_contains(cone, lpr));
  }
}

TEST_CASE("section volume fixtures") {
  CHECK(section_volume(positive_orthant_cone(2)) == Rat(1, 2));
  CHECK(section_volume(positive_orthant_cone(3)) == Rat(1, 6));
  CHECK(section_volume(make_cone({{1, 1}, {1, 0}})) == Rat(1, 4));
}

TEST_CASE("standard cone volume is 1/n!") {
  for (int n = 2; n <= 6; ++n)
    CHECK(section_volume(positive_orthant_cone(n)) == Rat(1, factorial(n)));
}

TEST_CASE("orthant cones tile the whole cross-polytope") {
  for (int n = 2; n <= 5; ++n) {
    Rat total = 0;
    for (const auto& sig : all_orthants(n))
      total += section_volume(orthant_cone(sig).positive_representative);
    CHECK(total == Rat(Int(1) << n, factorial(n)));
  }
}

TEST_CASE("section volume is invariant under ray rescaling") {
  auto base = make_cone({{1, 1, 0}, {0, 2, 1}, {3, 0, 1}});
  auto scaled = SimplicialCone({{Rat(7, 3), Rat(7, 3), Rat(0)},
                                {Rat(0), Rat(1), Rat(1, 2)},
                                {Rat(12), Rat(0), Rat(4)}});
  CHECK(section_volume(base) == section_volume(scaled));
}

TEST_CASE("transformed section volume divides by the lattice index") {
  auto orthant = positive_orthant_cone(2);
  CHECK(transformed_section_volume(orthant, build_lattice(LensParams(1, {0, 0}))) ==
        Rat(1, 2));
  CHECK(transformed_section_volume(orthant, build_lattice(LensParams(3, {1, 1}))) ==
        Rat(1, 6));
  CHECK(transformed_section_volume(make_cone({{1, 1}, {1, 0}}),
                                   build_lattice(LensParams(2, {1, 1}))) ==
        Rat(1, 8));
}

TEST_CASE("orthant cone signatures and reflection") {
  auto plus = orthant_cone(OrthantSignature({1, 1}));
  CHECK(plus.signed_rays() ==
        std::vector<std::vector<Int>>{{1, 0}, {0, 1}});

  auto mixed = orthant_cone(OrthantSignature({1, -1}));
  CHECK(mixed.signed_rays() ==
        std::vector<std::vector<Int>>{{1, 0}, {0, -1}});
  CHECK(mixed.reflect(make_point({3, -4})).coords ==
        std::vector<long long>{3, 4});

  auto neg = orthant_cone(OrthantSignature({-1, -1, -1}));
  CHECK(neg.signed_rays() ==
        std::vector<std::vector<Int>>{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  CHECK(all_orthants(3).size() == 8);
}

TEST_CASE("cone text format round trip") {
  auto cone = parse_cone_text("1,1\n1/2,0\n");
  CHECK(cone.rays() == std::vector<std::vector<Int>>{{1, 1}, {1, 0}});
  CHECK(section_volume(cone) == Rat(1, 4));
  auto again = parse_cone_text(cone_to_text(cone));
  CHECK(again == cone);
  CHECK_THROWS_AS(parse_cone_text("1,0\n2,0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cone_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_cone_text("1,x\n0,1\n"), std::invalid_argument);
}
