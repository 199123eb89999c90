#include "parwall/walls.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "parwall/errors.hpp"

namespace parwall {

namespace {

struct LineKey {
  std::vector<long long> coeff;
  long long cst;
  friend bool operator==(const LineKey&, const LineKey&) = default;
  friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Canonical integer form of the hyperplane induced by a triple:
// coefficients n_i*r - s*m_i, constant s*d - r*e, divided by the common gcd,
// leading coefficient positive.
LineKey line_of(const WallTriple& t, const ModuliSetup& setup) {
  const long long r = setup.rank();
  LineKey key;
  key.coeff.reserve(setup.k());
  long long g = 0;
  for (int i = 0; i < setup.k(); ++i) {
    long long c = t.n[i] * r - static_cast<long long>(t.s) * setup.mult()[i];
    key.coeff.push_back(c);
    g = gcd_ll(g, c);
  }
  key.cst = static_cast<long long>(t.s) * setup.degree() - r * t.e;
  g = gcd_ll(g, key.cst);
  if (g > 1) {
    for (auto& c : key.coeff) c /= g;
    key.cst /= g;
  }
  for (long long c : key.coeff) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& cc : key.coeff) cc = -cc;
      key.cst = -key.cst;
    }
    break;
  }
  return key;
}

bool triple_valid(const WallTriple& t, const ModuliSetup& setup) {
  if (t.s <= 0 || t.s >= setup.rank()) return false;
  if (static_cast<int>(t.n.size()) != setup.k()) return false;
  for (int i = 0; i < setup.k(); ++i) {
    // a rank-s subspace meets an m-dimensional flag in dimension at least
    // s + m - r, so triples below that bound admit no subbundle
    int lo = std::max(0, t.s + setup.mult()[i] - setup.rank());
    if (t.n[i] < lo || t.n[i] > std::min(t.s, setup.mult()[i])) return false;
  }
  return true;
}

WallTriple dual_triple(const WallTriple& t, const ModuliSetup& setup) {
  WallTriple d;
  d.s = setup.rank() - t.s;
  d.e = setup.degree() - t.e;
  d.n.resize(t.n.size());
  for (std::size_t i = 0; i < t.n.size(); ++i) d.n[i] = setup.mult()[i] - t.n[i];
  return d;
}

// Every valid triple whose hyperplane could meet the cube; e is bounded by
// the strict range of the constant.
template <typename Fn>
void for_each_valid_triple(const ModuliSetup& setup, Fn&& fn) {
  const int r = setup.rank();
  const int d = setup.degree();
  std::vector<int> n(setup.k());
  auto loop_n = [&](int s, auto&& self, int idx) -> void {
    if (idx == setup.k()) {
      long long lo = 0, hi = 0;
      for (int i = 0; i < setup.k(); ++i) {
        long long c = static_cast<long long>(n[i]) * r - static_cast<long long>(s) * setup.mult()[i];
        lo += std::min(0LL, c);
        hi += std::max(0LL, c);
      }
      // lo < s*d - r*e < hi
      for (long long e = (static_cast<long long>(s) * d - hi) / r - 2;
           e <= (static_cast<long long>(s) * d - lo) / r + 2; ++e) {
        long long cst = static_cast<long long>(s) * d - static_cast<long long>(r) * e;
        if (cst <= lo || cst >= hi) continue;
        WallTriple t{s, static_cast<int>(e), n};
        fn(t);
      }
      return;
    }
    for (n[idx] = 0; n[idx] <= std::min(s, setup.mult()[idx]); ++n[idx]) self(s, self, idx + 1);
  };
  for (int s = 1; s < r; ++s) loop_n(s, loop_n, 0);
}

// Normal-form triples (n_x = s) generating the given hyperplane. The
// classification of destabilizing summands guarantees at least one exists.
std::vector<WallTriple> normal_form_generators(const LineKey& key, const ModuliSetup& setup) {
  std::vector<WallTriple> out;
  for_each_valid_triple(setup, [&](const WallTriple& t) {
    if (t.n[0] != t.s) return;
    if (line_of(t, setup) == key) out.push_back(t);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool coprime_set(const std::vector<long long>& values) {
  long long g = 0;
  for (long long v : values) g = gcd_ll(g, v);
  return g == 1;
}

Wall make_wall(const LineKey& key, const std::vector<WallTriple>& normal_forms,
               const ModuliSetup& setup) {
  Wall w;
  w.triple = normal_forms.front();
  w.coeff = key.coeff;
  w.cst = key.cst;
  if (setup.k() == 1) {
    w.kind = SlopeKind::one_point;
  } else {
    w.kind = w.triple.n[1] == 1 ? SlopeKind::negative : SlopeKind::positive;
  }
  w.multiple = normal_forms.size() > 1;
  std::vector<long long> primal{w.triple.s, w.triple.e};
  for (int ni : w.triple.n) primal.push_back(ni);
  WallTriple dt = dual_triple(w.triple, setup);
  std::vector<long long> dual{dt.s, dt.e};
  for (int ni : dt.n) dual.push_back(ni);
  w.gcd_simple = coprime_set(primal) && coprime_set(dual);
  return w;
}

}  // namespace

std::vector<Wall> enumerate_walls(const ModuliSetup& setup) {
  std::map<LineKey, std::vector<WallTriple>> lines;
  for_each_valid_triple(setup, [&](const WallTriple& t) {
    if (t.n[0] != t.s) return;  // duals regenerate the same hyperplanes
    lines[line_of(t, setup)].push_back(t);
  });
  std::vector<Wall> walls;
  walls.reserve(lines.size());
  for (auto& [key, triples] : lines) {
    std::sort(triples.begin(), triples.end());
    walls.push_back(make_wall(key, triples, setup));
  }
  std::sort(walls.begin(), walls.end(),
            [](const Wall& a, const Wall& b) { return a.triple < b.triple; });
  return walls;
}

Wall dual_wall(const Wall& wall, const ModuliSetup& setup) {
  if (!triple_valid(wall.triple, setup)) throw DomainError("wall triple invalid for setup");
  Wall out = wall;
  out.triple = dual_triple(wall.triple, setup);
  return out;
}

bool is_multiple(const Wall& wall, const ModuliSetup& setup) {
  if (!triple_valid(wall.triple, setup)) throw DomainError("wall triple invalid for setup");
  return normal_form_generators(line_of(wall.triple, setup), setup).size() > 1;
}

long long wall_center_dim(const Wall& wall, const ModuliSetup& setup) {
  if (!triple_valid(wall.triple, setup)) throw DomainError("wall triple invalid for setup");
  const long long g = setup.genus();
  auto factor_dim = [&](long long rank, const std::vector<int>& flags) {
    long long dim = rank * rank * (g - 1) + 1;
    for (int f : flags) dim += static_cast<long long>(f) * (rank - f);
    return dim;
  };
  const WallTriple& t = wall.triple;
  WallTriple dt = dual_triple(t, setup);
  return factor_dim(t.s, t.n) + factor_dim(dt.s, dt.n) - g;
}

FirstWall first_wall(int rank, int degree) {
  NormalizedPair np = normalize_pair(rank, degree);
  FirstWall out;
  out.value = Rational(1, np.ell);
  out.destabilizer_rank_unit = np.ell;
  out.destabilizer_degree_unit = np.e;
  out.hecke_boundary = np.ell == 1;
  return out;
}

std::array<std::array<Rational, 2>, 2> wall_segment_in_square(const Wall& wall) {
  if (wall.coeff.size() != 2) throw DomainError("segment clipping needs a two-point wall");
  const Rational cx(wall.coeff[0]), cy(wall.coeff[1]), cst(wall.cst);
  const Rational zero(0), one(1);
  std::vector<std::array<Rational, 2>> pts;
  auto push = [&](const Rational& x, const Rational& y) {
    if (x < zero || x > one || y < zero || y > one) return;
    std::array<Rational, 2> p{x, y};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  };
  // coefficients are never zero for the supported configurations
  push(zero, cst / cy);
  push(one, (cst - cx) / cy);
  push(cst / cx, zero);
  push((cst - cy) / cx, one);
  if (pts.size() != 2) throw DomainError("wall does not cut the square in a segment");
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  return {pts[0], pts[1]};
}

}  // namespace parwall
