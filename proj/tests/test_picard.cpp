#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "parwall/errors.hpp"
#include "parwall/picard.hpp"

using namespace parwall;

namespace {

DivisorClass cls(long long x, long long y, long long t) {
  return DivisorClass{Rational(x), Rational(y), Rational(t)};
}

}  // namespace

TEST_CASE("weight-to-divisor map") {
  ModuliSetup setup = ModuliSetup::two_point(5, 2, 2);  // ell = 3
  CHECK(weight_to_divisor({Rational(0), Rational(0)}, setup) == cls(0, 0, 1));
  CHECK(weight_to_divisor({Rational(1), Rational(0)}, setup) == cls(5, 0, -2));
  CHECK(proportional_positive(weight_to_divisor({Rational(0), Rational(1, 2)}, setup), cls(0, 1, 1)));
  CHECK(proportional_positive(weight_to_divisor({Rational(1, 3), Rational(0)}, setup), cls(1, 0, 0)));
  CHECK_THROWS_AS(weight_to_divisor({Rational(2), Rational(0)}, setup), DomainError);

  ModuliSetup one = ModuliSetup::one_point(5, 2, 2);
  CHECK(weight_to_divisor({Rational(0)}, one) == cls(0, 0, 1));
  CHECK(proportional_positive(weight_to_divisor({Rational(1, 3)}, one), cls(1, 0, 0)));
}

TEST_CASE("the map is affine in the weight") {
  ModuliSetup setup = ModuliSetup::two_point(7, 3, 2);
  oracles::RandomRationals rnd(99);
  for (int trial = 0; trial < 50; ++trial) {
    Weight a{rnd.unit(), rnd.unit()};
    Weight b{rnd.unit(), rnd.unit()};
    Rational t = rnd.unit();
    Weight mix{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
    DivisorClass da = weight_to_divisor(a, setup);
    DivisorClass db = weight_to_divisor(b, setup);
    DivisorClass dm = weight_to_divisor(mix, setup);
    CHECK(dm == da + t * (db - da));
  }
}

TEST_CASE("effective cone rays") {
  Cone cone = effective_cone(ModuliSetup::two_point(5, 2, 2));
  REQUIRE(cone.rays.size() == 4);
  CHECK(cone.rays[0] == cls(0, 0, 1));
  CHECK(cone.rays[1] == cls(5, 0, -2));
  CHECK(cone.rays[2] == cls(0, 5, 4));
  CHECK(cone.rays[3] == cls(5, 5, 1));
  CHECK_FALSE(cone.heuristic);

  Cone r2 = effective_cone(ModuliSetup::two_point(2, 1, 2));
  CHECK(r2.rays == std::vector<DivisorClass>{cls(0, 0, 1), cls(2, 0, 0), cls(0, 2, 2), cls(2, 2, 1)});
}

TEST_CASE("corner weights hit the effective rays projectively") {
  for (int r = 2; r <= 12; ++r) {
    for (int d = 1; d < r; ++d) {
      if (std::gcd(r, d) != 1) continue;
      ModuliSetup setup = ModuliSetup::two_point(r, d, 2);
      Cone cone = effective_cone(setup);
      const Weight corners[] = {{Rational(0), Rational(0)},
                                {Rational(1), Rational(0)},
                                {Rational(0), Rational(1)},
                                {Rational(1), Rational(1)}};
      for (int i = 0; i < 4; ++i) {
        CHECK(proportional_positive(weight_to_divisor(corners[i], setup), cone.rays[static_cast<std::size_t>(i)]));
      }
      int ell = setup.normalized().ell;
      CHECK(proportional_positive(weight_to_divisor({Rational(0), Rational(1, r - ell)}, setup), cls(0, 1, 1)));
      CHECK(proportional_positive(weight_to_divisor({Rational(1, ell), Rational(0)}, setup), cls(1, 0, 0)));
    }
  }
}

TEST_CASE("one-point nef cones") {
  ModuliSetup setup = ModuliSetup::one_point(5, 2, 2);
  Cone x = nef_cone_one_point(Side::x, setup);
  CHECK(x.rays == std::vector<DivisorClass>{cls(0, 0, 1), cls(1, 0, 0)});
  Cone y = nef_cone_one_point(Side::y, setup);
  CHECK(y.rays == std::vector<DivisorClass>{cls(0, 0, 1), cls(0, 1, 1)});
  // rays are the weight map at a = 0 and at the first wall a = 1/ell
  CHECK(proportional_positive(weight_to_divisor({Rational(0)}, setup), x.rays[0]));
  CHECK(proportional_positive(weight_to_divisor({Rational(1, 3)}, setup), x.rays[1]));
  CHECK_THROWS_AS(nef_cone_one_point(Side::x, ModuliSetup::two_point(5, 2, 2)), DomainError);
}

TEST_CASE("dualizing classes") {
  CHECK(canonical_class(ModuliSetup::two_point(5, 2, 2)) == cls(-5, -5, -2));
  CHECK(canonical_class(ModuliSetup::one_point(5, 2, 2), Side::x) == cls(-5, 0, 1));
  CHECK(canonical_class(ModuliSetup::one_point(2, 1, 2), Side::y) == cls(0, -2, -3));
  // adding the dualizing class to O(r+1, r+1) Theta^2 leaves O(1,1)
  for (int r = 2; r <= 10; ++r) {
    for (int d = 1; d < r; ++d) {
      if (std::gcd(r, d) != 1) continue;
      ModuliSetup setup = ModuliSetup::two_point(r, d, 2);
      CHECK(cls(r + 1, r + 1, 2) + canonical_class(setup) == cls(1, 1, 0));
    }
  }
}

TEST_CASE("determinant-of-cohomology exponent") {
  CHECK(det_dual_theta_exponent(2, 1, 2) == -1);
  CHECK(det_dual_theta_exponent(5, 2, 3) == -7);
  CHECK_THROWS_AS(det_dual_theta_exponent(5, 2, 1), DomainError);
}

TEST_CASE("hecke pull-back identities") {
  HeckePullback hx = hecke_pullback_identity(Side::x, 5, 2);
  CHECK(hx.gcd_k == 1);
  CHECK(hx.cls == cls(5, 0, -2));
  HeckePullback hy = hecke_pullback_identity(Side::y, 5, 2);
  CHECK(hy.gcd_k == 1);
  CHECK(hy.cls == cls(0, 5, 4));
  HeckePullback h3 = hecke_pullback_identity(Side::x, 3, 1);
  CHECK(h3.gcd_k == 3);
  CHECK(h3.cls == cls(3, 0, 0));
}

TEST_CASE("cone membership on the reference cone") {
  Cone cone = effective_cone(ModuliSetup::two_point(5, 2, 2));
  CHECK(cone_contains(cone, cls(5, 5, 2), true));   // anticanonical interior point
  CHECK(cone_contains(cone, cls(0, 0, 1), false));  // a ray
  CHECK_FALSE(cone_contains(cone, cls(0, 0, 1), true));
  CHECK_FALSE(cone_contains(cone, cls(-1, 0, 0), false));
  CHECK(cone_contains(cone, cls(0, 0, 0), false));
  CHECK_FALSE(cone_contains(cone, cls(0, 0, 0), true));

  Cone line;
  line.rays = {cls(1, 0, 0), cls(-1, 0, 0)};
  CHECK_THROWS_AS(cone_contains(line, cls(1, 0, 0), false), ConeError);
}

TEST_CASE("cone membership agrees with the subset-solving oracle") {
  oracles::RandomRationals rnd(4242);
  std::vector<Cone> cones;
  cones.push_back(effective_cone(ModuliSetup::two_point(5, 2, 2)));
  cones.push_back(effective_cone(ModuliSetup::two_point(7, 3, 2)));
  cones.push_back(effective_cone(ModuliSetup::two_point(2, 1, 2)));
  cones.push_back(nef_cone_one_point(Side::x, ModuliSetup::one_point(5, 2, 2)));
  cones.push_back(nef_cone_one_point(Side::y, ModuliSetup::one_point(4, 3, 2)));
  for (const Cone& cone : cones) {
    int agreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      DivisorClass v{rnd.signed_small(), rnd.signed_small(), rnd.signed_small()};
      CHECK(cone_contains(cone, v, false) == oracles::carath_contains(cone.rays, v));
      CHECK(cone_contains(cone, v, true) == oracles::carath_strict(cone.rays, v));
      ++agreements;
    }
    CHECK(agreements == 1000);
    // interior points built from all rays are strictly inside
    DivisorClass sum{Rational(0), Rational(0), Rational(0)};
    for (const DivisorClass& r : cone.rays) sum = sum + r;
    CHECK(cone_contains(cone, sum, true));
  }
}

TEST_CASE("membership oracle also agrees on many-ray chamber cones") {
  oracles::RandomRationals rnd(31337);
  ModuliSetup setup = ModuliSetup::two_point(5, 2, 2);
  ChamberDecomposition dec = decompose(setup);
  for (int id : {0, static_cast<int>(dec.chambers.size()) / 2}) {
    Cone cone = chamber_nef_heuristic(dec, id, setup);
    for (int trial = 0; trial < 300; ++trial) {
      DivisorClass v{rnd.signed_small(), rnd.signed_small(), rnd.signed_small()};
      CHECK(cone_contains(cone, v, false) == oracles::carath_contains(cone.rays, v));
      CHECK(cone_contains(cone, v, true) == oracles::carath_strict(cone.rays, v));
    }
    // every weight inside the chamber maps inside the cone
    const Chamber& chamber = dec.chambers[static_cast<std::size_t>(id)];
    CHECK(cone_contains(cone, weight_to_divisor(chamber.sample, setup), false));
  }
}

TEST_CASE("fano-type interior point") {
  for (int r = 2; r <= 12; ++r) {
    for (int d = 1; d < r; ++d) {
      if (std::gcd(r, d) != 1) continue;
      Cone cone = effective_cone(ModuliSetup::two_point(r, d, 2));
      CHECK(cone_contains(cone, cls(r, r, 2), true));
    }
  }
}

TEST_CASE("boundary contractions") {
  ModuliSetup setup = ModuliSetup::two_point(5, 2, 2);
  ContractionDescriptor c = boundary_contraction(CubeEdge::ax1, setup);
  CHECK(c.kind == ContractionKind::hecke);
  CHECK(c.det_twist == -1);
  CHECK(c.twist_point == "x");
  CHECK(c.points == std::vector<std::string>{"y"});
  CHECK(c.mult == std::vector<int>{1});

  c = boundary_contraction(CubeEdge::ay1, setup);
  CHECK(c.kind == ContractionKind::hecke);
  CHECK(c.det_twist == -4);
  CHECK(c.twist_point == "y");

  c = boundary_contraction(CubeEdge::ay0, setup);
  CHECK(c.kind == ContractionKind::forgetful);
  CHECK(c.det_twist == 0);
  CHECK(c.points == std::vector<std::string>{"x"});
  CHECK(c.mult == std::vector<int>{4});

  c = boundary_contraction(CubeEdge::ax0, setup);
  CHECK(c.kind == ContractionKind::forgetful);
  CHECK(c.mult == std::vector<int>{1});

  ModuliSetup one = ModuliSetup::one_point(5, 2, 2);
  CHECK(boundary_contraction(CubeEdge::ax0, one).kind == ContractionKind::base);
  c = boundary_contraction(CubeEdge::ax1, one);
  CHECK(c.kind == ContractionKind::hecke);
  CHECK(c.det_twist == -1);
  CHECK_THROWS_AS(boundary_contraction(CubeEdge::ay0, one), DomainError);
}

TEST_CASE("chamber nef heuristic for the single-wall square") {
  ModuliSetup setup = ModuliSetup::two_point(2, 1, 2);
  ChamberDecomposition dec = decompose(setup);
  for (const Chamber& c : dec.chambers) {
    Cone cone = chamber_nef_heuristic(dec, c.id, setup);
    CHECK(cone.heuristic);
    REQUIRE(cone.rays.size() == 3);
    auto has_ray = [&](const DivisorClass& want) {
      for (const DivisorClass& r : cone.rays) {
        if (r == want) return true;
      }
      return false;
    };
    if (c.signs == SignVector{-1}) {
      // image of the triangle (0,0), (1,0), (0,1)
      CHECK(has_ray(cls(0, 0, 1)));
      CHECK(has_ray(cls(1, 0, 0)));
      CHECK(has_ray(cls(0, 1, 1)));
    } else {
      // image of the triangle (1,0), (1,1), (0,1)
      CHECK(has_ray(cls(1, 0, 0)));
      CHECK(has_ray(cls(2, 2, 1)));
      CHECK(has_ray(cls(0, 1, 1)));
    }
  }
}
