#pragma once

#include <string>
#include <vector>

#include "parwall/chambers.hpp"
#include "parwall/moduli.hpp"
#include "parwall/rational.hpp"

namespace parwall {

/// A divisor class written as O(c_x, c_y) tensor Theta^t in the rank-3
/// lattice. One-point models embed with the unused coordinate fixed to zero
/// (c_y = 0 on the x side, c_x = 0 on the y side).
struct DivisorClass {
  Rational cx;
  Rational cy;
  Rational t;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    return {a.cx + b.cx, a.cy + b.cy, a.t + b.t};
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    return {a.cx - b.cx, a.cy - b.cy, a.t - b.t};
  }
  friend DivisorClass operator*(const Rational& s, const DivisorClass& a) {
    return {s * a.cx, s * a.cy, s * a.t};
  }
};

/// Equality of rays: b is a strictly positive rational multiple of a.
bool proportional_positive(const DivisorClass& a, const DivisorClass& b);

struct Cone {
  std::vector<DivisorClass> rays;
  /// Set on cones read off from chamber closures rather than proved: the
  /// chamber-wise nef cone of the two-point model is variational-GIT folklore,
  /// not a established identity, so it is reported as a heuristic.
  bool heuristic = false;
};

enum class Side { x, y };

/// Divisor class attached to a weight. Two points:
/// (r a_x, r a_y, 1 - ell a_x + ell a_y); one point (x side): (r a, 0, 1 - ell a).
DivisorClass weight_to_divisor(const Weight& a, const ModuliSetup& setup);

/// The four extremal rays Theta, O(r,0)Theta^{1-ell}, O(0,r)Theta^{1+ell},
/// O(r,r)Theta of the effective cone of the two-point model.
Cone effective_cone(const ModuliSetup& setup);

/// Nef cone of the one-point projectivized models, in the ambient lattice:
/// x side {Theta, O(1,0)}, y side {Theta, O(0,1)Theta}.
Cone nef_cone_one_point(Side side, const ModuliSetup& setup);

/// Dualizing class: (-r, -r, -2) for two points.
DivisorClass canonical_class(const ModuliSetup& setup);

/// One-point dualizing classes: x side (-r, 0, ell-2), y side (0, -r, -ell-2).
DivisorClass canonical_class(const ModuliSetup& setup, Side side);

/// Exponent ell(1-g) - e of the determinant-of-cohomology identity for the
/// dual bundle. Requires g >= 2.
long long det_dual_theta_exponent(int rank, int degree, int genus);

/// The Hecke pull-back identity: Theta_target^k equals the returned class,
/// with k = gcd(r, d-1) on the x side and k = gcd(r, d-(r-1)) on the y side.
struct HeckePullback {
  long long gcd_k = 0;
  DivisorClass cls;
};
HeckePullback hecke_pullback_identity(Side side, int rank, int degree);

/// Exact membership in the pointed cone spanned by the rays; strict asks for
/// the (relative) interior. Throws ConeError when the rays are not pointed.
bool cone_contains(const Cone& cone, const DivisorClass& v, bool strict);

enum class ContractionKind { forgetful, hecke, base };

/// Symbolic description of the rational contraction at a boundary edge of the
/// weight cube: the target's rank, determinant twist (an integer multiple of
/// the named point), and surviving parabolic data.
struct ContractionDescriptor {
  ContractionKind kind = ContractionKind::base;
  int rank = 0;
  long long det_twist = 0;     // determinant changes by det_twist * [point]
  std::string twist_point;     // empty unless kind == hecke
  std::vector<std::string> points;
  std::vector<int> mult;
};

enum class CubeEdge { ax0, ax1, ay0, ay1 };

/// Contraction at a cube edge of the two-point model: weight to 0 forgets the
/// flag, weight to 1 is the generalized Hecke modification with determinant
/// twist -(r - m)[p]. For the one-point model only ax0/ax1 are meaningful and
/// ax0 contracts to the plain moduli space.
ContractionDescriptor boundary_contraction(CubeEdge edge, const ModuliSetup& setup);

/// Image of a chamber closure under the weight-to-divisor map, as a cone over
/// the polygon vertices. Labeled heuristic; see Cone::heuristic.
Cone chamber_nef_heuristic(const ChamberDecomposition& decomposition, int chamber_id,
                           const ModuliSetup& setup);

}  // namespace parwall
