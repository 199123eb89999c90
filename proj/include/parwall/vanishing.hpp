#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parwall/rational.hpp"

namespace parwall {

/// One cohomology cell: degree i, Theta-twist j.
struct Cell {
  long long i = 0;
  long long j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class RegionKind { kodaira, lepotier, flip, serre_dual_side, step3_kollar, small_genus_table };

std::string region_name(RegionKind kind);

/// A vanishing region: a conjunction of integer half-plane constraints on
/// (i, j). Thresholds are exact rationals compared exactly; evaluation is
/// pure and total over cells.
struct VanishingRegion {
  RegionKind name = RegionKind::kodaira;
  std::optional<long long> i_min;
  std::optional<long long> i_max;
  std::optional<Rational> j_min;
  bool j_min_strict = false;
  std::optional<long long> j_max;

  bool contains(const Cell& cell) const;
};

/// i >= 1 and j >= ell - 1.
VanishingRegion kodaira_region(int rank, int degree);

/// i >= r and j >= -1.
VanishingRegion lepotier_region(int rank, int degree);

/// 1 <= i <= (r-1)(g-1) - 1 and j > -1 + (1-ell)/r, evaluated exactly; the
/// strict bound admits j >= -1 for ell >= 2 but only j >= 0 for ell = 1.
VanishingRegion flip_region(int rank, int degree, int genus);

/// Duality image of a cell: (i, j) -> (n - i, -j - 3) where n = (r^2-1)(g-1).
/// The image is tested on the dual side, whose normalization is ell' = r-ell.
struct SerreImage {
  Cell cell;
  bool side_swapped = true;
  int dual_ell = 0;
};
SerreImage serre_reduce(const Cell& cell, int rank, int degree, int genus);

/// Per-cell coverage of the intermediate-cohomology rectangle
/// 1 <= i <= n-1, -1 <= j <= j_max, with provenance and the uncovered set.
/// Twists below -1 fold onto the dual side through serre_reduce.
struct CoverageTable {
  int rank = 0;
  int degree = 0;
  int genus = 0;
  int ell = 0;
  long long n = 0;
  long long i_min = 1;
  long long i_max = 0;
  long long j_min = -1;
  long long j_max = 0;
  /// The region set this table was generated from. For genus 2 the thresholds
  /// are uniform over the degree (see acm_coverage).
  std::vector<VanishingRegion> regions;
  std::vector<std::vector<unsigned>> cover_bits;  // [i - i_min][j - j_min]
  std::vector<Cell> uncovered;                    // sorted

  static constexpr unsigned bit_kodaira = 1;
  static constexpr unsigned bit_lepotier = 2;
  static constexpr unsigned bit_flip = 4;
  static constexpr unsigned bit_step3 = 8;
  static constexpr unsigned bit_serre = 16;
  static constexpr unsigned bit_small_genus = 32;

  unsigned bits_at(long long i, long long j) const;
  std::vector<std::string> names_at(long long i, long long j) const;
};

/// Builds the coverage table. For g >= 3 the union of the three vanishing
/// regions (plus the Kollar boundary column when ell = 1) covers everything.
/// For g = 2 the table certifies the bound that holds uniformly over the
/// degree: thresholds are taken at the worst normalization, the boundary
/// column j = -1 is granted for 1 <= i <= r-1, and the uncovered set is
/// exactly {(r-1, j) : 0 <= j <= r-3}.
CoverageTable acm_coverage(int rank, int degree, int genus);

/// Coverage of a single cell at any twist, folding j <= -2 through duality.
/// Returns the provenance bits (0 = uncovered).
unsigned acm_cell_cover(int rank, int degree, int genus, const Cell& cell);

struct AcmVerdict {
  bool acm = false;
  std::vector<Cell> gap;
};

/// acm iff the coverage has no uncovered cell; otherwise the gap cells.
AcmVerdict acm_verdict(int rank, int degree, int genus);

/// Whether the twisted bundle is intermediate-cohomology-free with respect to
/// the k-th power polarization: every cell (i, -1 + k*j') must be covered.
bool acm_wrt_power(int rank, int degree, int genus, long long k);

/// An imported hypothesis recorded in reports but never computed here.
struct ExternalAssumption {
  std::string name;
  std::string statement;
};

/// Degree-range coverage for the fully-faithfulness criterion: cohomology in
/// degrees i < (r-1)(g-1) and i >= r^2 vanishes; the verdict is complete iff
/// the two ranges meet, which happens exactly when g >= r+3.
struct EmbedReport {
  int rank = 0;
  int degree = 0;
  int genus = 0;
  long long n = 0;             // top degree
  long long covered_below = 0; // all i < covered_below vanish
  long long covered_from = 0;  // all i >= covered_from vanish
  std::vector<long long> uncovered;
  bool fully_faithful = false;
  std::vector<ExternalAssumption> assumptions;
};
EmbedReport embed_coverage(int rank, int degree, int genus);

}  // namespace parwall
