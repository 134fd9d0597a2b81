#include <doctest.h>

#include <random>

#include "lensharm/lattice.hpp"
#include "lensharm/oracle.hpp"

using namespace lensharm;

namespace {

// deterministic parameter generator (raw mt19937 draws only, so the sampled
// instances are identical on every platform)
struct ParamGen {
  std::mt19937 rng{20240601};

  long long draw(long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % (hi - lo + 1));
  }

  LensParams random_params(int n_max = 4, long long q_max = 12) {
    int n = static_cast<int>(draw(2, n_max));
    long long q = draw(1, q_max);
    std::vector<long long> p(n);
    for (auto& x : p) {
      do {
        x = draw(0, q - 1);
      } while (gcd_ll(x, q) != 1);
    }
    return LensParams(q, p);
  }
};

}  // namespace

TEST_CASE("lens params validation and canonical range") {
  CHECK_THROWS_AS(LensParams(4, {2, 1}), std::invalid_argument);  // gcd(2,4)=2
  CHECK_THROWS_AS(LensParams(5, {1}), std::invalid_argument);     // n < 2
  CHECK_THROWS_AS(LensParams(0, {1, 1}), std::invalid_argument);
  CHECK(LensParams(5, {-1, 7}).p() == std::vector<long long>{4, 2});
  CHECK(LensParams(1, {0, 0}).p() == std::vector<long long>{0, 0});
}

TEST_CASE("build_lattice: canonical bases") {
  auto z2 = build_lattice(LensParams(1, {0, 0}));
  CHECK(z2.basis() == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
  CHECK(z2.det() == 1);

  auto l3 = build_lattice(LensParams(3, {1, 1}));
  CHECK(l3.basis() == std::vector<std::vector<long long>>{{3, 2}, {0, 1}});
  CHECK(l3.det() == 3);
}

TEST_CASE("build_lattice: q=3 basis spans exactly the congruence points") {
  auto lat = build_lattice(LensParams(3, {1, 1}));
  // oracle: every point of [-6,6]^2 with a1+a2 = 0 mod 3 must be an integer
  // combination of the columns, and nothing else is
  const auto& b = lat.basis();
  long long det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
  REQUIRE(det == 3);
  for (long long x = -6; x <= 6; ++x) {
    for (long long y = -6; y <= 6; ++y) {
      // Cramer solve b * (u, v) = (x, y)
      long long nu = x * b[1][1] - y * b[0][1];
      long long nv = y * b[0][0] - x * b[1][0];
      bool integral = nu % det == 0 && nv % det == 0;
      CHECK(integral == ((x + y) % 3 == 0));
    }
  }
}

TEST_CASE("membership fixtures") {
  auto lat = build_lattice(LensParams(3, {1, 1}));
  CHECK(lat.contains(make_point({1, 2})));
  CHECK_FALSE(lat.contains(make_point({1, 1})));
  CHECK(lat.contains(make_point({0, 0})));
  CHECK_THROWS_AS(lat.contains(make_point({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("membership closed under addition and negation") {
  ParamGen gen;
  for (int it = 0; it < 25; ++it) {
    LensParams params = gen.random_params();
    auto lat = build_lattice(params);
    // draw members by scaling basis columns
    std::vector<long long> a(params.n(), 0), b(params.n(), 0);
    for (int j = 0; j < params.n(); ++j) {
      long long ca = gen.draw(-3, 3), cb = gen.draw(-3, 3);
      for (int i = 0; i < params.n(); ++i) {
        a[i] += ca * lat.basis()[i][j];
        b[i] += cb * lat.basis()[i][j];
      }
    }
    REQUIRE(lat.contains(make_point(a)));
    REQUIRE(lat.contains(make_point(b)));
    std::vector<long long> sum(params.n()), neg(params.n());
    for (int i = 0; i < params.n(); ++i) {
      sum[i] = a[i] + b[i];
      neg[i] = -a[i];
    }
    CHECK(lat.contains(make_point(sum)));
    CHECK(lat.contains(make_point(neg)));
  }
}

TEST_CASE("determinant equals q on random parameters") {
  ParamGen gen;
  for (int it = 0; it < 60; ++it) {
    LensParams params = gen.random_params(4, 30);
    CHECK(build_lattice(params).det() == params.q());
  }
}

TEST_CASE("construction is canonical across residue representatives") {
  auto a = build_lattice(LensParams(7, {1, 3}));
  auto b = build_lattice(LensParams(7, {8, -4}));  // same residues mod 7
  CHECK(a == b);
  auto c = build_lattice(LensParams(7, {3, 1}));  // permuted: different lattice
  CHECK_FALSE(a == c);
}

TEST_CASE("shell_points fixtures") {
  auto l3 = build_lattice(LensParams(3, {1, 1}));
  auto pts = shell_points(l3, ShellRegion::closed_orthant(), 3);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].coords == std::vector<long long>{0, 3});
  CHECK(pts[1].coords == std::vector<long long>{1, 2});
  CHECK(pts[2].coords == std::vector<long long>{2, 1});
  CHECK(pts[3].coords == std::vector<long long>{3, 0});

  CHECK(shell_points(l3, ShellRegion::closed_orthant(), 2).empty());

  auto z2 = build_lattice(LensParams(1, {0, 0}));
  auto signed1 = shell_points(z2, ShellRegion::full_signed(), 1);
  REQUIRE(signed1.size() == 4);
  CHECK(signed1[0].coords == std::vector<long long>{-1, 0});
  CHECK(signed1[1].coords == std::vector<long long>{0, -1});
  CHECK(signed1[2].coords == std::vector<long long>{0, 1});
  CHECK(signed1[3].coords == std::vector<long long>{1, 0});
}

TEST_CASE("shell_count_fast fixtures") {
  CHECK(shell_count_fast(build_lattice(LensParams(3, {1, 1})),
                         ShellRegion::closed_orthant(), 3) == 4);
  auto z2 = build_lattice(LensParams(1, {0, 0}));
  for (long long s = 0; s <= 12; ++s)
    CHECK(shell_count_fast(z2, ShellRegion::closed_orthant(), s) == s + 1);
  CHECK(shell_count_fast(build_lattice(LensParams(2, {1, 1})),
                         ShellRegion::full_signed(), 2) == 8);
}

TEST_CASE("shell_count_fast rejects cone regions") {
  auto z2 = build_lattice(LensParams(1, {0, 0}));
  auto region = ShellRegion::cone(positive_orthant_cone(2));
  CHECK_THROWS_AS(shell_count_fast(z2, region, 3), std::invalid_argument);
}

TEST_CASE("DP counter equals point listing on random instances") {
  ParamGen gen;
  for (int it = 0; it < 10; ++it) {
    LensParams params = gen.random_params();
    auto lat = build_lattice(params);
    for (auto region : {ShellRegion::full_signed(), ShellRegion::closed_orthant(),
                        ShellRegion::open_orthant()}) {
      ShellCounter counter(lat, region);
      for (long long s = 0; s <= 40; ++s)
        CHECK(counter.count(s) == Int(shell_points(lat, region, s).size()));
    }
  }
}

TEST_CASE("DP counter equals the brute-force oracle") {
  ParamGen gen;
  for (int it = 0; it < 12; ++it) {
    LensParams params = gen.random_params();
    auto lat = build_lattice(params);
    using oracle::BruteRegion;
    const std::pair<ShellRegion, BruteRegion> pairs[] = {
        {ShellRegion::full_signed(), BruteRegion::signed_lattice},
        {ShellRegion::closed_orthant(), BruteRegion::closed_orthant},
        {ShellRegion::open_orthant(), BruteRegion::open_orthant},
    };
    for (const auto& [region, brute] : pairs) {
      ShellCounter counter(lat, region);
      for (long long s = 0; s <= 18; ++s)
        CHECK(counter.count(s) ==
              Int(oracle::brute_shell_count(params, brute, s)));
    }
  }
}

TEST_CASE("cumulative counts are prefix sums") {
  auto lat = build_lattice(LensParams(5, {1, 2, 3}));
  ShellCounter counter(lat, ShellRegion::full_signed());
  Int run = 0;
  for (long long s = 0; s <= 30; ++s) {
    run += counter.count(s);
    CHECK(counter.cumulative(s) == run);
  }
}
