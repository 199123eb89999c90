#pragma once

#include <array>
#include <vector>

#include "parwall/moduli.hpp"
#include "parwall/rational.hpp"

namespace parwall {

/// A destabilizing triple: subbundle rank s, subbundle degree e, and flag
/// multiplicities n (one entry per parabolic point, n_i <= min(s, m_i)).
struct WallTriple {
  int s = 0;
  int e = 0;
  std::vector<int> n;

  friend bool operator==(const WallTriple&, const WallTriple&) = default;
  friend auto operator<=>(const WallTriple& a, const WallTriple& b) {
    if (auto c = a.s <=> b.s; c != 0) return c;
    if (auto c = a.e <=> b.e; c != 0) return c;
    return a.n <=> b.n;
  }
};

enum class SlopeKind { negative, positive, one_point };

/// A wall: the hyperplane sum_i coeff_i * a_i = cst inside the weight cube,
/// together with its canonical representative triple and classification.
/// Coefficients are integers with gcd(coeffs, cst) = 1 and positive leading
/// coefficient, so equal hyperplanes compare bit-equal.
struct Wall {
  WallTriple triple;
  std::vector<long long> coeff;
  long long cst = 0;
  SlopeKind kind = SlopeKind::one_point;
  bool multiple = false;
  /// The coprimality-based simplicity test ({s,e,n_i} and the dual set both
  /// coprime). Informational only; it disagrees with the scaling definition
  /// on some multiple walls, so `multiple` is the authoritative flag.
  bool gcd_simple = true;

  /// For one-point walls, the weight value a with coeff*a = cst.
  Rational value() const { return Rational(Int(cst), Int(coeff.at(0))); }
};

/// All walls of the configuration, one canonical representative per
/// hyperplane, sorted lexicographically by (s, e, n). Only hyperplanes
/// meeting the open cube are walls.
std::vector<Wall> enumerate_walls(const ModuliSetup& setup);

/// The complementary triple (r-s, d-e, m-n) on the same hyperplane.
Wall dual_wall(const Wall& wall, const ModuliSetup& setup);

/// True when the hyperplane is generated by more than one slope-normal-form
/// triple, i.e. some k-fold scaling of a generating triple is still valid.
bool is_multiple(const Wall& wall, const ModuliSetup& setup);

/// Dimension of the wall-crossing center: the fibered product of the two
/// factor moduli over the Picard variety,
/// [s^2(g-1)+1+sum n_i(s-n_i)] + [(r-s)^2(g-1)+1+sum (m-n)_i(r-s-(m-n)_i)] - g.
long long wall_center_dim(const Wall& wall, const ModuliSetup& setup);

/// Smallest wall value for the one-point configuration.
struct FirstWall {
  Rational value;
  int destabilizer_rank_unit = 0;    // destabilizer family has rank k*this
  int destabilizer_degree_unit = 0;  // and degree k*this
  /// Set when the value is 1: the contraction there is the Hecke boundary of
  /// the weight interval, not an interior wall.
  bool hecke_boundary = false;
};

/// The first wall of the one-point problem: value 1/ell where ell*d = 1 mod r.
FirstWall first_wall(int rank, int degree);

/// Endpoints of the wall segment clipped to the closed unit square (k = 2),
/// sorted by (x, y).
std::array<std::array<Rational, 2>, 2> wall_segment_in_square(const Wall& wall);

}  // namespace parwall
