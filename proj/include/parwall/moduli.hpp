#pragma once

#include <string>
#include <vector>

#include "parwall/errors.hpp"

namespace parwall {

/// The unique pair (ell, e) with ell*d - r*e = 1 and 0 < ell < r.
struct NormalizedPair {
  int ell = 0;
  int e = 0;
};

/// A discrete problem instance: rank r, degree d, genus g, and the parabolic
/// configuration. Supported configurations are one point with multiplicity
/// r-1 and two points with multiplicities (r-1, 1); anything else is rejected
/// at construction so every downstream formula's precondition holds.
class ModuliSetup {
 public:
  ModuliSetup(int rank, int degree, int genus, std::vector<int> mult,
              std::vector<std::string> points = {});

  static ModuliSetup one_point(int rank, int degree, int genus);
  static ModuliSetup two_point(int rank, int degree, int genus);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  int genus() const { return genus_; }
  int k() const { return static_cast<int>(mult_.size()); }
  const std::vector<int>& mult() const { return mult_; }
  const std::vector<std::string>& points() const { return points_; }
  const NormalizedPair& normalized() const { return norm_; }

 private:
  int rank_;
  int degree_;
  int genus_;
  std::vector<int> mult_;
  std::vector<std::string> points_;
  NormalizedPair norm_;
};

/// Solves ell*d = 1 mod r for 0 < ell < r and returns e = (ell*d - 1)/r.
/// Throws SetupError unless gcd(r, d) = 1, r >= 2, 0 < d < r.
NormalizedPair normalize_pair(int rank, int degree);

/// Dimension of the moduli space of the given configuration:
/// (r^2-1)(g-1) + sum m_i(r-m_i) with fixed determinant,
/// r^2(g-1) + 1 + sum m_i(r-m_i) otherwise.
long long moduli_dim(const ModuliSetup& setup, bool fixed_determinant);

/// The same closed form for an arbitrary multiplicity vector (0 <= m_i <= r),
/// e.g. the point-free moduli space with mult = {}.
long long moduli_dim(int rank, int genus, const std::vector<int>& mult, bool fixed_determinant);

/// Guaranteed lower bound (r-1)(g-1)+1 on the codimension of a wall-crossing
/// center; in particular every wall-crossing is a flip for g >= 2.
long long codim_bound(int rank, int genus);

/// Smallest genus with (r-1)(g-1) >= r^2; closed form r+3.
int genus_bound_embedding(int rank);

}  // namespace parwall
