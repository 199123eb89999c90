#include "parwall/moduli.hpp"

#include <numeric>

namespace parwall {

namespace {

void check_rank_degree(int rank, int degree) {
  if (rank < 2) throw SetupError("rank must be at least 2");
  if (degree <= 0 || degree >= rank) throw SetupError("degree must satisfy 0 < d < r");
  if (std::gcd(rank, degree) != 1) throw SetupError("rank and degree must be coprime");
}

}  // namespace

NormalizedPair normalize_pair(int rank, int degree) {
  check_rank_degree(rank, degree);
  for (int ell = 1; ell < rank; ++ell) {
    long long lhs = static_cast<long long>(ell) * degree;
    if (lhs % rank == 1) {
      NormalizedPair out;
      out.ell = ell;
      out.e = static_cast<int>((lhs - 1) / rank);
      return out;
    }
  }
  throw SetupError("no normalization found; rank and degree are not coprime");
}

ModuliSetup::ModuliSetup(int rank, int degree, int genus, std::vector<int> mult,
                         std::vector<std::string> points)
    : rank_(rank), degree_(degree), genus_(genus), mult_(std::move(mult)), points_(std::move(points)) {
  check_rank_degree(rank_, degree_);
  if (genus_ < 2) throw SetupError("genus must be at least 2");
  const bool one = mult_.size() == 1 && mult_[0] == rank_ - 1;
  const bool two = mult_.size() == 2 && mult_[0] == rank_ - 1 && mult_[1] == 1;
  if (!one && !two) throw SetupError("unsupported parabolic configuration");
  if (points_.empty()) {
    points_ = one ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"};
  }
  if (points_.size() != mult_.size()) throw SetupError("point labels do not match multiplicities");
  norm_ = normalize_pair(rank_, degree_);
}

ModuliSetup ModuliSetup::one_point(int rank, int degree, int genus) {
  return ModuliSetup(rank, degree, genus, {rank - 1});
}

ModuliSetup ModuliSetup::two_point(int rank, int degree, int genus) {
  return ModuliSetup(rank, degree, genus, {rank - 1, 1});
}

long long moduli_dim(const ModuliSetup& setup, bool fixed_determinant) {
  return moduli_dim(setup.rank(), setup.genus(), setup.mult(), fixed_determinant);
}

long long moduli_dim(int rank, int genus, const std::vector<int>& mult, bool fixed_determinant) {
  if (rank < 2 || genus < 2) throw SetupError("moduli_dim requires r >= 2 and g >= 2");
  const long long r = rank;
  const long long g = genus;
  long long flags = 0;
  for (int m : mult) {
    if (m < 0 || m > rank) throw SetupError("multiplicity outside [0, r]");
    flags += static_cast<long long>(m) * (r - m);
  }
  if (fixed_determinant) return (r * r - 1) * (g - 1) + flags;
  return r * r * (g - 1) + 1 + flags;
}

long long codim_bound(int rank, int genus) {
  if (rank < 2 || genus < 2) throw SetupError("codim_bound requires r >= 2 and g >= 2");
  return static_cast<long long>(rank - 1) * (genus - 1) + 1;
}

int genus_bound_embedding(int rank) {
  if (rank < 2) throw SetupError("genus_bound_embedding requires r >= 2");
  int g = 2;
  while (static_cast<long long>(rank - 1) * (g - 1) < static_cast<long long>(rank) * rank) ++g;
  return g;
}

}  // namespace parwall
