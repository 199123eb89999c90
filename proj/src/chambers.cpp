#include "parwall/chambers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parwall/errors.hpp"

namespace parwall {

namespace {

Rational eval(const Wall& w, const Weight& a) {
  Rational acc(0);
  for (std::size_t i = 0; i < w.coeff.size(); ++i) acc += Rational(w.coeff[i]) * a[i];
  return acc - Rational(w.cst);
}

void check_in_cube(const Weight& a, int k) {
  if (static_cast<int>(a.size()) != k) throw DomainError("weight has wrong number of coordinates");
  for (const Rational& c : a) {
    if (c < Rational(0) || c > Rational(1)) throw DomainError("weight coordinate outside [0,1]");
  }
}

// y-coordinate of the wall at the given x; walls are never vertical.
Rational wall_y_at(const Wall& w, const Rational& x) {
  return (Rational(w.cst) - Rational(w.coeff[0]) * x) / Rational(w.coeff[1]);
}

std::optional<std::array<Rational, 2>> intersect(const Wall& a, const Wall& b) {
  Rational det = Rational(a.coeff[0]) * Rational(b.coeff[1]) - Rational(a.coeff[1]) * Rational(b.coeff[0]);
  if (det.is_zero()) return std::nullopt;
  Rational x = (Rational(a.cst) * Rational(b.coeff[1]) - Rational(a.coeff[1]) * Rational(b.cst)) / det;
  Rational y = (Rational(a.coeff[0]) * Rational(b.cst) - Rational(a.cst) * Rational(b.coeff[0])) / det;
  return std::array<Rational, 2>{x, y};
}

bool in_closed_square(const std::array<Rational, 2>& p) {
  return p[0] >= Rational(0) && p[0] <= Rational(1) && p[1] >= Rational(0) && p[1] <= Rational(1);
}

ChamberDecomposition decompose_interval(const ModuliSetup& setup) {
  ChamberDecomposition out;
  out.walls = enumerate_walls(setup);
  std::vector<Rational> cuts;
  for (const Wall& w : out.walls) cuts.push_back(w.value());
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> stops{Rational(0)};
  stops.insert(stops.end(), cuts.begin(), cuts.end());
  stops.push_back(Rational(1));
  std::vector<std::pair<SignVector, Weight>> found;
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
    Weight sample{(stops[i] + stops[i + 1]) / Rational(2)};
    found.emplace_back(locate(sample, out.walls), sample);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::map<SignVector, int> ids;
  for (const auto& [signs, sample] : found) {
    int id = static_cast<int>(out.chambers.size());
    ids.emplace(signs, id);
    out.chambers.push_back(Chamber{id, signs, sample});
  }
  std::set<std::pair<int, int>> adjacency;
  for (const Wall& w : out.walls) {
    Rational v = w.value();
    // halve eps until both side probes are generic interior points
    for (Rational eps(1, 2);; eps = eps / Rational(2)) {
      Weight lo{v - eps}, hi{v + eps};
      if (lo[0] <= Rational(0) || hi[0] >= Rational(1)) continue;
      SignVector sl = locate(lo, out.walls), sh = locate(hi, out.walls);
      if (!is_generic(sl) || !is_generic(sh)) continue;
      int a = ids.at(sl), b = ids.at(sh);
      adjacency.emplace(std::min(a, b), std::max(a, b));
      break;
    }
  }
  out.adjacency.assign(adjacency.begin(), adjacency.end());
  out.subdivision_vertices = static_cast<long long>(out.walls.size()) + 2;
  out.subdivision_edges = static_cast<long long>(out.walls.size()) + 1;
  return out;
}

}  // namespace

bool is_generic(const SignVector& signs) {
  return std::none_of(signs.begin(), signs.end(), [](int s) { return s == 0; });
}

SignVector locate(const Weight& a, const std::vector<Wall>& walls) {
  SignVector out;
  out.reserve(walls.size());
  for (const Wall& w : walls) {
    if (a.size() != w.coeff.size()) throw DomainError("weight has wrong number of coordinates");
    out.push_back(eval(w, a).sign());
  }
  return out;
}

SignVector locate(const Weight& a, const ModuliSetup& setup) {
  check_in_cube(a, setup.k());
  return locate(a, enumerate_walls(setup));
}

ChamberDecomposition decompose(const ModuliSetup& setup) {
  if (setup.k() == 1) return decompose_interval(setup);

  ChamberDecomposition out;
  out.walls = enumerate_walls(setup);
  const auto& walls = out.walls;

  // Breakpoints of the vertical-strip sweep: wall/boundary and wall/wall
  // intersection abscissae.
  std::set<Rational> xs{Rational(0), Rational(1)};
  std::set<std::array<Rational, 2>> vertices;
  vertices.insert({Rational(0), Rational(0)});
  vertices.insert({Rational(1), Rational(0)});
  vertices.insert({Rational(0), Rational(1)});
  vertices.insert({Rational(1), Rational(1)});
  for (const Wall& w : walls) {
    auto seg = wall_segment_in_square(w);
    for (const auto& p : seg) {
      xs.insert(p[0]);
      vertices.insert(p);
    }
  }
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      auto p = intersect(walls[i], walls[j]);
      if (p && in_closed_square(*p)) {
        xs.insert((*p)[0]);
        vertices.insert(*p);
      }
    }
  }

  // One sample per (strip, gap) cell; equal sign vectors are one chamber.
  std::map<SignVector, Weight> samples;
  std::vector<Rational> xlist(xs.begin(), xs.end());
  for (std::size_t i = 0; i + 1 < xlist.size(); ++i) {
    Rational xm = (xlist[i] + xlist[i + 1]) / Rational(2);
    std::vector<Rational> ys{Rational(0), Rational(1)};
    for (const Wall& w : walls) {
      Rational y = wall_y_at(w, xm);
      if (y > Rational(0) && y < Rational(1)) ys.push_back(y);
    }
    std::sort(ys.begin(), ys.end());
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      if (ys[j] == ys[j + 1]) continue;
      Weight sample{xm, (ys[j] + ys[j + 1]) / Rational(2)};
      SignVector signs = locate(sample, walls);
      samples.emplace(std::move(signs), std::move(sample));
    }
  }
  std::map<SignVector, int> ids;
  for (const auto& [signs, sample] : samples) {
    int id = static_cast<int>(out.chambers.size());
    ids.emplace(signs, id);
    out.chambers.push_back(Chamber{id, signs, sample});
  }

  // Wall edges between consecutive events give facets; their midpoints see
  // exactly one zero sign, which flips between the two chambers.
  std::set<std::pair<int, int>> adjacency;
  long long wall_edges = 0;
  for (std::size_t wi = 0; wi < walls.size(); ++wi) {
    const Wall& w = walls[wi];
    auto seg = wall_segment_in_square(w);
    std::set<Rational> events{seg[0][0], seg[1][0]};
    for (std::size_t j = 0; j < walls.size(); ++j) {
      if (j == wi) continue;
      auto p = intersect(w, walls[j]);
      if (p && in_closed_square(*p)) events.insert((*p)[0]);
    }
    std::vector<Rational> ev(events.begin(), events.end());
    for (std::size_t j = 0; j + 1 < ev.size(); ++j) {
      ++wall_edges;
      Rational xm = (ev[j] + ev[j + 1]) / Rational(2);
      Weight mid{xm, wall_y_at(w, xm)};
      if (mid[0] <= Rational(0) || mid[0] >= Rational(1) || mid[1] <= Rational(0) ||
          mid[1] >= Rational(1)) {
        continue;  // facet on the square boundary separates nothing
      }
      SignVector signs = locate(mid, walls);
      SignVector lo = signs, hi = signs;
      lo[wi] = -1;
      hi[wi] = 1;
      adjacency.emplace(std::min(ids.at(lo), ids.at(hi)), std::max(ids.at(lo), ids.at(hi)));
    }
  }
  out.adjacency.assign(adjacency.begin(), adjacency.end());

  // Euler audit data: boundary edges split each side at incident vertices.
  long long boundary_edges = 0;
  for (int side = 0; side < 4; ++side) {
    std::set<Rational> marks;
    for (const auto& v : vertices) {
      bool on = false;
      switch (side) {
        case 0: on = v[1] == Rational(0); break;
        case 1: on = v[1] == Rational(1); break;
        case 2: on = v[0] == Rational(0); break;
        case 3: on = v[0] == Rational(1); break;
      }
      if (on) marks.insert(side < 2 ? v[0] : v[1]);
    }
    boundary_edges += static_cast<long long>(marks.size()) - 1;
  }
  out.subdivision_vertices = static_cast<long long>(vertices.size());
  out.subdivision_edges = wall_edges + boundary_edges;
  return out;
}

FlipPath path(const Weight& a, const Weight& b, const ModuliSetup& setup) {
  check_in_cube(a, setup.k());
  check_in_cube(b, setup.k());
  std::vector<Wall> walls = enumerate_walls(setup);
  SignVector sa = locate(a, walls), sb = locate(b, walls);
  if (!is_generic(sa) || !is_generic(sb)) throw GenericityError("path endpoint lies on a wall");

  FlipPath out;
  out.start = a;
  out.end = b;
  std::map<Rational, std::size_t> hits;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const Wall& w = walls[i];
    Rational denom(0), num = Rational(w.cst);
    for (std::size_t c = 0; c < w.coeff.size(); ++c) {
      denom += Rational(w.coeff[c]) * (b[c] - a[c]);
      num -= Rational(w.coeff[c]) * a[c];
    }
    if (denom.is_zero()) continue;  // parallel; endpoints are off the wall
    Rational t = num / denom;
    if (t <= Rational(0) || t >= Rational(1)) continue;
    auto [it, fresh] = hits.emplace(t, i);
    if (!fresh) throw DegeneratePathError("segment passes through a wall intersection");
    (void)it;
  }
  for (const auto& [t, idx] : hits) out.crossings.push_back(Crossing{walls[idx], t});
  return out;
}

std::vector<Weight> chamber_polygon(const ChamberDecomposition& decomposition, int chamber_id) {
  if (chamber_id < 0 || chamber_id >= static_cast<int>(decomposition.chambers.size()))
    throw DomainError("no such chamber");
  const Chamber& chamber = decomposition.chambers[static_cast<std::size_t>(chamber_id)];
  if (chamber.sample.size() != 2) throw DomainError("chamber polygons need the two-point configuration");

  std::vector<Weight> poly{{Rational(0), Rational(0)},
                           {Rational(1), Rational(0)},
                           {Rational(1), Rational(1)},
                           {Rational(0), Rational(1)}};
  for (std::size_t i = 0; i < decomposition.walls.size(); ++i) {
    const Wall& w = decomposition.walls[i];
    const int side = chamber.signs[i];
    auto value = [&](const Weight& p) { return Rational(side) * eval(w, p); };
    std::vector<Weight> next;
    for (std::size_t j = 0; j < poly.size(); ++j) {
      const Weight& cur = poly[j];
      const Weight& prev = poly[(j + poly.size() - 1) % poly.size()];
      Rational vc = value(cur), vp = value(prev);
      if (vp.sign() != vc.sign() && vp.sign() != 0 && vc.sign() != 0) {
        Rational t = vp / (vp - vc);
        next.push_back({prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])});
      }
      if (vc >= Rational(0)) next.push_back(cur);
    }
    poly = std::move(next);
  }
  // drop duplicate corners introduced by touching cuts
  std::vector<Weight> unique;
  for (const auto& p : poly) {
    if (unique.empty() || !(unique.back() == p)) unique.push_back(p);
  }
  if (unique.size() > 1 && unique.front() == unique.back()) unique.pop_back();
  auto smallest = std::min_element(unique.begin(), unique.end());
  std::rotate(unique.begin(), smallest, unique.end());
  return unique;
}

}  // namespace parwall
