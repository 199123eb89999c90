#pragma once

#include <utility>
#include <vector>

#include "parwall/walls.hpp"

namespace parwall {

/// A weight: an exact rational point of the closed cube [0,1]^k.
using Weight = std::vector<Rational>;

/// One entry per canonical wall: the sign of sum c_i a_i - cst (-1, 0, +1).
/// A weight is generic exactly when no entry is zero, and two generic weights
/// share a chamber exactly when their sign vectors agree.
using SignVector = std::vector<int>;

bool is_generic(const SignVector& signs);

/// Sign vector of a weight against the given canonical wall list.
SignVector locate(const Weight& a, const std::vector<Wall>& walls);

/// Convenience overload enumerating the setup's walls first.
SignVector locate(const Weight& a, const ModuliSetup& setup);

struct Chamber {
  int id = 0;
  SignVector signs;
  Weight sample;  // exact interior point reproducing `signs`
};

/// The chamber decomposition of the weight cube: every open chamber with a
/// deterministic id (lexicographic order of sign vectors), the adjacency
/// graph, and the vertex/edge counts of the induced planar subdivision for
/// structural audits.
struct ChamberDecomposition {
  std::vector<Wall> walls;
  std::vector<Chamber> chambers;
  std::vector<std::pair<int, int>> adjacency;  // id pairs, first < second
  long long subdivision_vertices = 0;
  long long subdivision_edges = 0;
};

ChamberDecomposition decompose(const ModuliSetup& setup);

/// One transverse wall crossing of a straight path, at parameter t in (0,1).
struct Crossing {
  Wall wall;
  Rational t;
};

/// A straight-line flip path between two generic weights with its ordered,
/// transverse wall crossings.
struct FlipPath {
  Weight start;
  Weight end;
  std::vector<Crossing> crossings;
};

/// Straight segment from a to b. Throws GenericityError when an endpoint lies
/// on a wall and DegeneratePathError when the segment runs through a wall
/// intersection; perturbation is the caller's job.
FlipPath path(const Weight& a, const Weight& b, const ModuliSetup& setup);

/// Closure of a chamber as a convex polygon (k = 2): the unit square cut by
/// every wall half-plane of the chamber's sign vector. Vertices in
/// counterclockwise order starting from the lexicographically smallest.
std::vector<Weight> chamber_polygon(const ChamberDecomposition& decomposition, int chamber_id);

}  // namespace parwall
