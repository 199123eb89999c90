#include "parwall/picard.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "parwall/errors.hpp"

namespace parwall {

namespace {

using IVec = std::array<Int, 3>;

IVec primitive(const DivisorClass& v) {
  Int l = rational_lcm(rational_lcm(v.cx.den(), v.cy.den()), v.t.den());
  IVec out{v.cx.num() * (l / v.cx.den()), v.cy.num() * (l / v.cy.den()),
           v.t.num() * (l / v.t.den())};
  Int g = rational_gcd(rational_gcd(out[0], out[1]), out[2]);
  if (g > 1) {
    for (auto& c : out) c /= g;
  }
  return out;
}

bool is_zero(const IVec& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Int dot(const IVec& a, const IVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

IVec cross(const IVec& a, const IVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

IVec negate(const IVec& a) { return {-a[0], -a[1], -a[2]}; }

int rank_of(const std::vector<IVec>& rays) {
  std::vector<IVec> basis;
  for (const IVec& r : rays) {
    IVec v = r;
    for (const IVec& b : basis) {
      // eliminate along b's pivot coordinate
      int p = 0;
      while (b[p] == 0) ++p;
      if (v[p] == 0) continue;
      Int bp = b[p], vp = v[p];
      for (int i = 0; i < 3; ++i) v[i] = v[i] * bp - b[i] * vp;
    }
    if (!is_zero(v)) basis.push_back(v);
    if (basis.size() == 3) break;
  }
  return static_cast<int>(basis.size());
}

// Membership in a pointed cone of rank 1: every ray must point the same way.
bool contains_rank1(const std::vector<IVec>& rays, const IVec& v, bool strict) {
  const IVec& b = rays.front();
  for (const IVec& r : rays) {
    if (dot(r, b) <= 0) throw ConeError("cone is not pointed");
  }
  if (!is_zero(cross(b, v))) return false;
  Int d = dot(v, b);
  return strict ? d > 0 : d >= 0;
}

// Rank 2: project to the span and compare against the two angular extremes.
bool contains_rank2(const std::vector<IVec>& rays, const IVec& v, bool strict) {
  // pick a normal of the span to define a planar cross product
  IVec normal{0, 0, 0};
  for (std::size_t i = 0; i < rays.size() && is_zero(normal); ++i)
    for (std::size_t j = i + 1; j < rays.size() && is_zero(normal); ++j)
      normal = cross(rays[i], rays[j]);
  if (dot(normal, v) != 0) return false;  // v outside the span
  auto planar_cross = [&](const IVec& a, const IVec& b) { return dot(normal, cross(a, b)); };

  const IVec* right = nullptr;
  const IVec* left = nullptr;
  for (const IVec& c : rays) {
    bool r_ok = true, l_ok = true;
    for (const IVec& o : rays) {
      if (planar_cross(c, o) < 0) r_ok = false;
      if (planar_cross(o, c) < 0) l_ok = false;
    }
    if (r_ok && !right) right = &c;
    if (l_ok && !left) left = &c;
  }
  if (!right || !left) throw ConeError("cone is not pointed");
  if (planar_cross(*right, *left) == 0 && dot(*right, *left) < 0)
    throw ConeError("cone is not pointed");
  Int a = planar_cross(*right, v);
  Int b = planar_cross(v, *left);
  return strict ? (a > 0 && b > 0) : (a >= 0 && b >= 0);
}

// Rank 3: enumerate facet normals as oriented pairwise cross products.
bool contains_rank3(const std::vector<IVec>& rays, const IVec& v, bool strict) {
  std::vector<IVec> facets;
  auto seen = [&](const IVec& h) {
    return std::find(facets.begin(), facets.end(), h) != facets.end();
  };
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      IVec h = cross(rays[i], rays[j]);
      if (is_zero(h)) continue;
      bool all_nonneg = true, all_nonpos = true;
      for (const IVec& r : rays) {
        Int d = dot(h, r);
        if (d < 0) all_nonneg = false;
        if (d > 0) all_nonpos = false;
      }
      if (!all_nonneg && !all_nonpos) continue;
      if (all_nonpos) h = negate(h);
      Int g = rational_gcd(rational_gcd(h[0], h[1]), h[2]);
      if (g > 1)
        for (auto& c : h) c /= g;
      if (!seen(h)) facets.push_back(h);
    }
  }
  IVec sum{0, 0, 0};
  for (const IVec& h : facets)
    for (int i = 0; i < 3; ++i) sum[i] += h[i];
  for (const IVec& r : rays) {
    if (dot(sum, r) <= 0) throw ConeError("cone is not pointed");
  }
  for (const IVec& h : facets) {
    Int d = dot(h, v);
    if (strict ? d <= 0 : d < 0) return false;
  }
  return true;
}

}  // namespace

bool proportional_positive(const DivisorClass& a, const DivisorClass& b) {
  std::array<Rational, 3> av{a.cx, a.cy, a.t}, bv{b.cx, b.cy, b.t};
  int pivot = -1;
  for (int i = 0; i < 3; ++i) {
    if (!av[i].is_zero() || !bv[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return false;  // both zero: not rays
  if (av[pivot].is_zero() || bv[pivot].is_zero()) return false;
  Rational ratio = av[pivot] / bv[pivot];
  if (ratio.sign() <= 0) return false;
  for (int i = 0; i < 3; ++i) {
    if (av[i] != ratio * bv[i]) return false;
  }
  return true;
}

DivisorClass weight_to_divisor(const Weight& a, const ModuliSetup& setup) {
  if (static_cast<int>(a.size()) != setup.k())
    throw DomainError("weight has wrong number of coordinates");
  for (const Rational& c : a) {
    if (c < Rational(0) || c > Rational(1)) throw DomainError("weight coordinate outside [0,1]");
  }
  const Rational r(setup.rank());
  const Rational ell(setup.normalized().ell);
  if (setup.k() == 1) {
    return {r * a[0], Rational(0), Rational(1) - ell * a[0]};
  }
  return {r * a[0], r * a[1], Rational(1) - ell * a[0] + ell * a[1]};
}

Cone effective_cone(const ModuliSetup& setup) {
  if (setup.k() != 2) throw DomainError("effective cone is computed for the two-point model");
  const Rational r(setup.rank());
  const Rational ell(setup.normalized().ell);
  Cone cone;
  cone.rays = {
      {Rational(0), Rational(0), Rational(1)},
      {r, Rational(0), Rational(1) - ell},
      {Rational(0), r, Rational(1) + ell},
      {r, r, Rational(1)},
  };
  return cone;
}

Cone nef_cone_one_point(Side side, const ModuliSetup& setup) {
  if (setup.k() != 1) throw DomainError("one-point nef cone needs the one-point model");
  Cone cone;
  if (side == Side::x) {
    cone.rays = {{Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)}};
  } else {
    cone.rays = {{Rational(0), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(1)}};
  }
  return cone;
}

DivisorClass canonical_class(const ModuliSetup& setup) {
  if (setup.k() != 2) throw DomainError("two-point dualizing class needs the two-point model");
  const Rational r(setup.rank());
  return {-r, -r, Rational(-2)};
}

DivisorClass canonical_class(const ModuliSetup& setup, Side side) {
  if (setup.k() != 1) throw DomainError("one-point dualizing class needs the one-point model");
  const Rational r(setup.rank());
  const int ell = setup.normalized().ell;
  if (side == Side::x) return {-r, Rational(0), Rational(ell - 2)};
  return {Rational(0), -r, Rational(-ell - 2)};
}

long long det_dual_theta_exponent(int rank, int degree, int genus) {
  if (genus < 2) throw DomainError("determinant identity needs g >= 2");
  NormalizedPair np = normalize_pair(rank, degree);
  return static_cast<long long>(np.ell) * (1 - genus) - np.e;
}

HeckePullback hecke_pullback_identity(Side side, int rank, int degree) {
  NormalizedPair np = normalize_pair(rank, degree);
  HeckePullback out;
  const Rational r(rank);
  if (side == Side::x) {
    long long twist = degree - 1;
    out.gcd_k = std::gcd(static_cast<long long>(rank), twist < 0 ? -twist : twist);
    out.cls = {r, Rational(0), Rational(1 - np.ell)};
  } else {
    long long twist = degree - (rank - 1);
    out.gcd_k = std::gcd(static_cast<long long>(rank), twist < 0 ? -twist : twist);
    out.cls = {Rational(0), r, Rational(1 + np.ell)};
  }
  return out;
}

bool cone_contains(const Cone& cone, const DivisorClass& v, bool strict) {
  std::vector<IVec> rays;
  for (const DivisorClass& r : cone.rays) {
    IVec p = primitive(r);
    if (is_zero(p)) throw ConeError("zero ray");
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
  }
  IVec w = primitive(v);
  const bool v_zero = is_zero(w);
  if (rays.empty()) return v_zero && !strict;
  if (v_zero) return !strict;
  switch (rank_of(rays)) {
    case 1: return contains_rank1(rays, w, strict);
    case 2: return contains_rank2(rays, w, strict);
    default: return contains_rank3(rays, w, strict);
  }
}

ContractionDescriptor boundary_contraction(CubeEdge edge, const ModuliSetup& setup) {
  ContractionDescriptor out;
  out.rank = setup.rank();
  const auto& pts = setup.points();
  const auto& mult = setup.mult();
  if (setup.k() == 1) {
    if (edge == CubeEdge::ay0 || edge == CubeEdge::ay1)
      throw DomainError("one-point model has no y edge");
    if (edge == CubeEdge::ax0) {
      out.kind = ContractionKind::base;
      return out;
    }
    out.kind = ContractionKind::hecke;
    out.det_twist = -(setup.rank() - mult[0]);
    out.twist_point = pts[0];
    return out;
  }
  const int dropped = (edge == CubeEdge::ax0 || edge == CubeEdge::ax1) ? 0 : 1;
  const int kept = 1 - dropped;
  out.points = {pts[kept]};
  out.mult = {mult[kept]};
  if (edge == CubeEdge::ax0 || edge == CubeEdge::ay0) {
    out.kind = ContractionKind::forgetful;
    return out;
  }
  out.kind = ContractionKind::hecke;
  out.det_twist = -(setup.rank() - mult[dropped]);
  out.twist_point = pts[dropped];
  return out;
}

Cone chamber_nef_heuristic(const ChamberDecomposition& decomposition, int chamber_id,
                           const ModuliSetup& setup) {
  Cone cone;
  cone.heuristic = true;
  for (const Weight& vertex : chamber_polygon(decomposition, chamber_id)) {
    DivisorClass cls = weight_to_divisor(vertex, setup);
    IVec p = primitive(cls);
    DivisorClass ray{Rational(p[0]), Rational(p[1]), Rational(p[2])};
    if (std::find(cone.rays.begin(), cone.rays.end(), ray) == cone.rays.end())
      cone.rays.push_back(ray);
  }
  return cone;
}

}  // namespace parwall
