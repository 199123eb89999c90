#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "parwall/chambers.hpp"
#include "parwall/errors.hpp"

using namespace parwall;

namespace {

const Chamber* chamber_of(const ChamberDecomposition& dec, const SignVector& signs) {
  const Chamber* found = nullptr;
  for (const Chamber& c : dec.chambers) {
    if (c.signs == signs) {
      REQUIRE(found == nullptr);
      found = &c;
    }
  }
  return found;
}

}  // namespace

TEST_CASE("locate evaluates exact signs") {
  ModuliSetup r2 = ModuliSetup::two_point(2, 1, 2);
  CHECK(locate(Weight{Rational(1, 4), Rational(1, 4)}, r2) == SignVector{-1});
  CHECK(locate(Weight{Rational(1, 2), Rational(1, 2)}, r2) == SignVector{0});
  CHECK_THROWS_AS(locate(Weight{Rational(2), Rational(0)}, r2), DomainError);
  CHECK_THROWS_AS(locate(Weight{Rational(1, 2)}, r2), DomainError);

  ModuliSetup r5 = ModuliSetup::two_point(5, 2, 2);
  Weight eps{Rational(1, 100), Rational(1, 100)};
  std::vector<Wall> walls = enumerate_walls(r5);
  SignVector signs = locate(eps, r5);
  REQUIRE(signs.size() == 7);
  for (std::size_t i = 0; i < walls.size(); ++i) {
    // direct evaluation of each canonical form
    Rational v = Rational(walls[i].coeff[0]) * eps[0] + Rational(walls[i].coeff[1]) * eps[1] -
                 Rational(walls[i].cst);
    CHECK(signs[i] == v.sign());
    CHECK(signs[i] != 0);
  }
}

TEST_CASE("decomposition of the square") {
  ModuliSetup r2 = ModuliSetup::two_point(2, 1, 2);
  ChamberDecomposition dec = decompose(r2);
  CHECK(dec.chambers.size() == 2);
  CHECK(dec.adjacency.size() == 1);
  CHECK(dec.adjacency[0] == std::pair<int, int>{0, 1});

  ModuliSetup r3 = ModuliSetup::two_point(3, 1, 2);
  dec = decompose(r3);
  CHECK(dec.chambers.size() == 4);
  // the inner triangle with vertices (1,0), (0,1/2), (1/2,1) borders the
  // other three chambers
  std::size_t degree3 = 0;
  std::map<int, int> degree;
  for (auto [a, b] : dec.adjacency) {
    degree[a]++;
    degree[b]++;
  }
  for (auto [id, deg] : degree) {
    if (deg == 3) ++degree3;
  }
  CHECK(degree3 == 1);

  for (const Chamber& c : dec.chambers) {
    CHECK(is_generic(c.signs));
    CHECK(locate(c.sample, r3) == c.signs);
  }
}

TEST_CASE("chamber counts match the rasterization oracle") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {5, 2}, {5, 3}}) {
    ModuliSetup setup = ModuliSetup::two_point(r, d, 2);
    ChamberDecomposition dec = decompose(setup);
    CHECK(static_cast<int>(dec.chambers.size()) == oracles::raster_chamber_count(dec.walls));
  }
  // regression constant for the reference arrangement
  CHECK(decompose(ModuliSetup::two_point(5, 2, 2)).chambers.size() == 10);
}

TEST_CASE("euler formula for the planar subdivision") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {5, 2}, {5, 4}}) {
    ModuliSetup setup = ModuliSetup::two_point(r, d, 2);
    ChamberDecomposition dec = decompose(setup);
    long long faces = static_cast<long long>(dec.chambers.size()) + 1;
    CHECK(dec.subdivision_vertices - dec.subdivision_edges + faces == 2);
  }
}

TEST_CASE("adjacent chambers differ in exactly one sign") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}}) {
    ModuliSetup setup = ModuliSetup::two_point(r, d, 2);
    ChamberDecomposition dec = decompose(setup);
    for (auto [a, b] : dec.adjacency) {
      const SignVector& sa = dec.chambers[static_cast<std::size_t>(a)].signs;
      const SignVector& sb = dec.chambers[static_cast<std::size_t>(b)].signs;
      int diff = 0;
      for (std::size_t i = 0; i < sa.size(); ++i) diff += sa[i] != sb[i];
      CHECK(diff == 1);
    }
  }
}

TEST_CASE("every raster-witnessed adjacency is reported") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {5, 2}, {5, 3}}) {
    ModuliSetup setup = ModuliSetup::two_point(r, d, 2);
    ChamberDecomposition dec = decompose(setup);
    std::set<std::pair<int, int>> reported(dec.adjacency.begin(), dec.adjacency.end());
    std::map<SignVector, int> ids;
    for (const Chamber& c : dec.chambers) ids[c.signs] = c.id;
    for (const auto& [sa, sb] : oracles::raster_adjacencies(dec.walls)) {
      auto a = ids.find(sa);
      auto b = ids.find(sb);
      REQUIRE(a != ids.end());
      REQUIRE(b != ids.end());
      CHECK(reported.count({std::min(a->second, b->second), std::max(a->second, b->second)}) == 1);
    }
  }
}

TEST_CASE("random points land in exactly one chamber") {
  oracles::RandomRationals rnd(20240811);
  for (auto [r, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {5, 2}}) {
    ModuliSetup setup = ModuliSetup::two_point(r, d, 2);
    ChamberDecomposition dec = decompose(setup);
    int placed = 0;
    while (placed < 400) {
      Weight p{rnd.unit(), rnd.unit()};
      SignVector signs = locate(p, dec.walls);
      if (!is_generic(signs)) continue;
      ++placed;
      CHECK(chamber_of(dec, signs) != nullptr);  // exactly one by the REQUIRE inside
    }
  }
}

TEST_CASE("the rank-3 inner chamber is the predicted triangle") {
  ModuliSetup setup = ModuliSetup::two_point(3, 1, 2);
  ChamberDecomposition dec = decompose(setup);
  std::map<int, int> degree;
  for (auto [a, b] : dec.adjacency) {
    degree[a]++;
    degree[b]++;
  }
  for (const Chamber& c : dec.chambers) {
    if (degree[c.id] != 3) continue;
    std::vector<Weight> poly = chamber_polygon(dec, c.id);
    REQUIRE(poly.size() == 3);
    std::set<std::pair<std::string, std::string>> got;
    for (const Weight& v : poly) got.emplace(v[0].str(), v[1].str());
    CHECK(got == std::set<std::pair<std::string, std::string>>{
                     {"1", "0"}, {"0", "1/2"}, {"1/2", "1"}});
  }
}

TEST_CASE("interval decomposition for one parabolic point") {
  ModuliSetup setup = ModuliSetup::one_point(5, 2, 2);
  ChamberDecomposition dec = decompose(setup);
  // walls at 1/3 and 3/4 split (0,1) in three chambers
  REQUIRE(dec.walls.size() == 2);
  CHECK(dec.chambers.size() == 3);
  CHECK(dec.adjacency.size() == 2);
  for (const Chamber& c : dec.chambers) CHECK(locate(c.sample, dec.walls) == c.signs);

  // degree 1 has no interior wall at all
  ChamberDecomposition flat = decompose(ModuliSetup::one_point(4, 1, 2));
  CHECK(flat.walls.empty());
  CHECK(flat.chambers.size() == 1);
  CHECK(flat.adjacency.empty());
}

TEST_CASE("paths cross walls transversally in order") {
  ModuliSetup r2 = ModuliSetup::two_point(2, 1, 2);
  FlipPath fp = path(Weight{Rational(1, 10), Rational(1, 10)}, Weight{Rational(9, 10), Rational(9, 10)}, r2);
  REQUIRE(fp.crossings.size() == 1);
  CHECK(fp.crossings[0].t == Rational(1, 2));
  CHECK(fp.crossings[0].wall.triple == WallTriple{1, 0, {1, 1}});

  Weight a{Rational(1, 10), Rational(1, 10)};
  CHECK(path(a, a, r2).crossings.empty());

  ModuliSetup r5 = ModuliSetup::two_point(5, 2, 2);
  Weight from{Rational(1, 100), Rational(1, 100)};
  Weight to{Rational(99, 100), Rational(1, 100)};
  FlipPath horizontal = path(from, to, r5);
  // oracle: substitute a_y = 1/100 into each canonical form and keep the
  // solutions with 1/100 < a_x < 99/100
  std::vector<Rational> expected_x;
  for (const Wall& w : enumerate_walls(r5)) {
    Rational x = (Rational(w.cst) - Rational(w.coeff[1]) * Rational(1, 100)) / Rational(w.coeff[0]);
    if (x > Rational(1, 100) && x < Rational(99, 100)) expected_x.push_back(x);
  }
  std::sort(expected_x.begin(), expected_x.end());
  REQUIRE(horizontal.crossings.size() == expected_x.size());
  CHECK(horizontal.crossings.size() == 4);
  for (std::size_t i = 0; i < expected_x.size(); ++i) {
    Rational x_at_t = from[0] + horizontal.crossings[i].t * (to[0] - from[0]);
    CHECK(x_at_t == expected_x[i]);
  }
  // strictly increasing crossing parameters
  for (std::size_t i = 0; i + 1 < horizontal.crossings.size(); ++i) {
    CHECK(horizontal.crossings[i].t < horizontal.crossings[i + 1].t);
  }
}

TEST_CASE("path endpoint and degeneracy errors") {
  ModuliSetup r2 = ModuliSetup::two_point(2, 1, 2);
  CHECK_THROWS_AS(path(Weight{Rational(1, 2), Rational(1, 2)}, Weight{Rational(1, 10), Rational(1, 10)}, r2),
                  GenericityError);
  // the rank-5 arrangement has three hyperplanes through (2/3, 1/3); a
  // horizontal segment through that point is degenerate
  ModuliSetup r5 = ModuliSetup::two_point(5, 2, 2);
  Weight a{Rational(1, 100), Rational(1, 3)};
  Weight b{Rational(99, 100), Rational(1, 3)};
  REQUIRE(is_generic(locate(a, r5)));
  REQUIRE(is_generic(locate(b, r5)));
  CHECK_THROWS_AS(path(a, b, r5), DegeneratePathError);
}

TEST_CASE("path crossings flip exactly the crossed signs") {
  oracles::RandomRationals rnd(777);
  ModuliSetup setup = ModuliSetup::two_point(5, 2, 2);
  std::vector<Wall> walls = enumerate_walls(setup);
  int done = 0;
  while (done < 60) {
    Weight a{rnd.unit(), rnd.unit()};
    Weight b{rnd.unit(), rnd.unit()};
    SignVector sa = locate(a, walls), sb = locate(b, walls);
    if (!is_generic(sa) || !is_generic(sb)) continue;
    FlipPath fp;
    try {
      fp = path(a, b, setup);
    } catch (const DegeneratePathError&) {
      continue;
    }
    ++done;
    SignVector s = sa;
    for (const Crossing& c : fp.crossings) {
      for (std::size_t i = 0; i < walls.size(); ++i) {
        if (walls[i].triple == c.wall.triple) s[i] = -s[i];
      }
    }
    CHECK(s == sb);
    // crossing count equals the Hamming distance
    std::size_t ham = 0;
    for (std::size_t i = 0; i < sa.size(); ++i) ham += sa[i] != sb[i];
    CHECK(fp.crossings.size() == ham);
  }
}

TEST_CASE("chamber polygons cut the square by the sign constraints") {
  ModuliSetup r2 = ModuliSetup::two_point(2, 1, 2);
  ChamberDecomposition dec = decompose(r2);
  const Chamber* lower = chamber_of(dec, SignVector{-1});
  REQUIRE(lower != nullptr);
  std::vector<Weight> poly = chamber_polygon(dec, lower->id);
  REQUIRE(poly.size() == 3);
  CHECK(poly[0] == Weight{Rational(0), Rational(0)});
  std::set<std::pair<std::string, std::string>> got;
  for (const Weight& v : poly) got.emplace(v[0].str(), v[1].str());
  CHECK(got == std::set<std::pair<std::string, std::string>>{{"0", "0"}, {"1", "0"}, {"0", "1"}});

  ModuliSetup r5 = ModuliSetup::two_point(5, 2, 2);
  ChamberDecomposition dec5 = decompose(r5);
  for (const Chamber& c : dec5.chambers) {
    std::vector<Weight> p = chamber_polygon(dec5, c.id);
    CHECK(p.size() >= 3);
  }
}
