#include "parwall/vanishing.hpp"

#include <algorithm>

#include "parwall/errors.hpp"
#include "parwall/moduli.hpp"

namespace parwall {

namespace {

long long top_degree(int rank, int genus) {
  return (static_cast<long long>(rank) * rank - 1) * (genus - 1);
}

void check_instance(int rank, int degree, int genus) {
  normalize_pair(rank, degree);
  if (genus < 2) throw DomainError("vanishing calculus needs g >= 2");
}

VanishingRegion step3_region(int rank) {
  VanishingRegion region;
  region.name = RegionKind::step3_kollar;
  region.i_min = 1;
  region.i_max = rank - 1;
  region.j_min = Rational(-1);
  region.j_max = -1;
  return region;
}

// Thresholds that hold for every normalization: the Kodaira bound at its
// weakest (ell = r-1), the flip bound at its weakest (ell = 1), and the
// boundary column. Used for the genus-2 table so the verdict is uniform in
// the degree.
std::vector<VanishingRegion> uniform_regions(int rank, int genus) {
  VanishingRegion kodaira;
  kodaira.name = RegionKind::kodaira;
  kodaira.i_min = 1;
  kodaira.j_min = Rational(rank - 2);

  VanishingRegion lepotier;
  lepotier.name = RegionKind::lepotier;
  lepotier.i_min = rank;
  lepotier.j_min = Rational(-1);

  VanishingRegion flip;
  flip.name = RegionKind::flip;
  flip.i_min = 1;
  flip.i_max = static_cast<long long>(rank - 1) * (genus - 1) - 1;
  flip.j_min = Rational(-1);
  flip.j_min_strict = true;

  return {kodaira, lepotier, flip, step3_region(rank)};
}

std::vector<VanishingRegion> instance_regions(int rank, int degree, int genus) {
  std::vector<VanishingRegion> out{kodaira_region(rank, degree), lepotier_region(rank, degree),
                                   flip_region(rank, degree, genus)};
  if (normalize_pair(rank, degree).ell == 1) out.push_back(step3_region(rank));
  return out;
}

unsigned bit_of(RegionKind kind) {
  switch (kind) {
    case RegionKind::kodaira: return CoverageTable::bit_kodaira;
    case RegionKind::lepotier: return CoverageTable::bit_lepotier;
    case RegionKind::flip: return CoverageTable::bit_flip;
    case RegionKind::step3_kollar: return CoverageTable::bit_step3;
    case RegionKind::serre_dual_side: return CoverageTable::bit_serre;
    case RegionKind::small_genus_table: return CoverageTable::bit_small_genus;
  }
  return 0;
}

unsigned direct_bits(const std::vector<VanishingRegion>& regions, const Cell& cell) {
  unsigned bits = 0;
  for (const VanishingRegion& region : regions) {
    if (region.contains(cell)) bits |= bit_of(region.name);
  }
  return bits;
}

bool in_small_genus_gap(int rank, const Cell& cell) {
  return cell.i == rank - 1 && cell.j >= 0 && cell.j <= rank - 3;
}

// Regions for both reduction sides; twists below -1 are folded onto the dual
// side through the duality map.
struct RegionSets {
  int rank = 0;
  int genus = 0;
  long long n = 0;
  bool small_genus_uniform = false;
  std::vector<VanishingRegion> direct;
  std::vector<VanishingRegion> dual;
};

RegionSets make_region_sets(int rank, int degree, int genus) {
  check_instance(rank, degree, genus);
  RegionSets sets;
  sets.rank = rank;
  sets.genus = genus;
  sets.n = top_degree(rank, genus);
  sets.small_genus_uniform = genus == 2;
  if (sets.small_genus_uniform) {
    sets.direct = uniform_regions(rank, genus);
    sets.dual = sets.direct;
  } else {
    sets.direct = instance_regions(rank, degree, genus);
    sets.dual = instance_regions(rank, rank - degree, genus);
  }
  return sets;
}

unsigned cover_bits(const RegionSets& sets, const Cell& cell) {
  if (sets.small_genus_uniform && in_small_genus_gap(sets.rank, cell)) return 0;
  unsigned bits = 0;
  if (cell.j >= -1) {
    bits = direct_bits(sets.direct, cell);
  } else {
    Cell dual{sets.n - cell.i, -cell.j - 3};
    if (direct_bits(sets.dual, dual) != 0) bits = CoverageTable::bit_serre;
  }
  // remaining cells vanish by the tabulated small-genus bound
  if (bits == 0 && sets.small_genus_uniform) bits = CoverageTable::bit_small_genus;
  return bits;
}

// Whether the rows 1..n-1 of the column at twist t are fully covered.
bool column_complete(const RegionSets& sets, long long t) {
  if (sets.small_genus_uniform) return !(t >= 0 && t <= sets.rank - 3);
  const std::vector<VanishingRegion>& regions = sets.direct;
  const std::vector<VanishingRegion>& side = t >= -1 ? regions : sets.dual;
  const long long twist = t >= -1 ? t : -t - 3;
  std::vector<std::pair<long long, long long>> spans;
  for (const VanishingRegion& region : side) {
    Cell probe{region.i_min.value_or(1), twist};
    if (!region.contains(probe)) continue;  // j-condition fails for the column
    spans.emplace_back(region.i_min.value_or(1), region.i_max.value_or(sets.n - 1));
  }
  std::sort(spans.begin(), spans.end());
  long long reach = 0;  // rows [1, reach] covered so far
  for (auto [lo, hi] : spans) {
    if (lo > reach + 1) break;
    reach = std::max(reach, hi);
  }
  return reach >= sets.n - 1;
}

}  // namespace

std::string region_name(RegionKind kind) {
  switch (kind) {
    case RegionKind::kodaira: return "kodaira";
    case RegionKind::lepotier: return "lepotier";
    case RegionKind::flip: return "flip";
    case RegionKind::serre_dual_side: return "serre_dual_side";
    case RegionKind::step3_kollar: return "step3_kollar";
    case RegionKind::small_genus_table: return "small_genus_table";
  }
  return "unknown";
}

bool VanishingRegion::contains(const Cell& cell) const {
  if (i_min && cell.i < *i_min) return false;
  if (i_max && cell.i > *i_max) return false;
  if (j_max && cell.j > *j_max) return false;
  if (j_min) {
    Rational j(cell.j);
    if (j_min_strict ? !(j > *j_min) : !(j >= *j_min)) return false;
  }
  return true;
}

VanishingRegion kodaira_region(int rank, int degree) {
  NormalizedPair np = normalize_pair(rank, degree);
  VanishingRegion region;
  region.name = RegionKind::kodaira;
  region.i_min = 1;
  region.j_min = Rational(np.ell - 1);
  return region;
}

VanishingRegion lepotier_region(int rank, int degree) {
  normalize_pair(rank, degree);
  VanishingRegion region;
  region.name = RegionKind::lepotier;
  region.i_min = rank;
  region.j_min = Rational(-1);
  return region;
}

VanishingRegion flip_region(int rank, int degree, int genus) {
  check_instance(rank, degree, genus);
  NormalizedPair np = normalize_pair(rank, degree);
  VanishingRegion region;
  region.name = RegionKind::flip;
  region.i_min = 1;
  region.i_max = static_cast<long long>(rank - 1) * (genus - 1) - 1;
  region.j_min = Rational(-1) + Rational(1 - np.ell, rank);
  region.j_min_strict = true;
  return region;
}

SerreImage serre_reduce(const Cell& cell, int rank, int degree, int genus) {
  check_instance(rank, degree, genus);
  const long long n = top_degree(rank, genus);
  if (cell.i < 0 || cell.i > n) throw DomainError("cell degree outside [0, n]");
  SerreImage out;
  out.cell = Cell{n - cell.i, -cell.j - 3};
  out.side_swapped = true;
  out.dual_ell = rank - normalize_pair(rank, degree).ell;
  return out;
}

unsigned acm_cell_cover(int rank, int degree, int genus, const Cell& cell) {
  return cover_bits(make_region_sets(rank, degree, genus), cell);
}

CoverageTable acm_coverage(int rank, int degree, int genus) {
  RegionSets sets = make_region_sets(rank, degree, genus);
  NormalizedPair np = normalize_pair(rank, degree);

  CoverageTable table;
  table.rank = rank;
  table.degree = degree;
  table.genus = genus;
  table.ell = np.ell;
  table.n = sets.n;
  table.i_min = 1;
  table.i_max = table.n - 1;
  table.j_min = -1;
  table.j_max = genus == 2 ? std::max(rank - 2, 0) : std::max(np.ell - 1, 0);
  table.regions = sets.direct;

  table.cover_bits.assign(
      static_cast<std::size_t>(table.i_max - table.i_min + 1),
      std::vector<unsigned>(static_cast<std::size_t>(table.j_max - table.j_min + 1), 0));
  for (long long i = table.i_min; i <= table.i_max; ++i) {
    for (long long j = table.j_min; j <= table.j_max; ++j) {
      unsigned bits = cover_bits(sets, Cell{i, j});
      table.cover_bits[static_cast<std::size_t>(i - table.i_min)]
                      [static_cast<std::size_t>(j - table.j_min)] = bits;
      if (bits == 0) table.uncovered.push_back(Cell{i, j});
    }
  }
  std::sort(table.uncovered.begin(), table.uncovered.end());
  return table;
}

unsigned CoverageTable::bits_at(long long i, long long j) const {
  if (i < i_min || i > i_max || j < j_min || j > j_max)
    throw DomainError("cell outside the coverage table");
  return cover_bits[static_cast<std::size_t>(i - i_min)][static_cast<std::size_t>(j - j_min)];
}

std::vector<std::string> CoverageTable::names_at(long long i, long long j) const {
  unsigned bits = bits_at(i, j);
  std::vector<std::string> out;
  const std::pair<unsigned, RegionKind> order[] = {
      {bit_kodaira, RegionKind::kodaira},       {bit_lepotier, RegionKind::lepotier},
      {bit_flip, RegionKind::flip},             {bit_step3, RegionKind::step3_kollar},
      {bit_serre, RegionKind::serre_dual_side}, {bit_small_genus, RegionKind::small_genus_table},
  };
  for (auto [bit, kind] : order) {
    if (bits & bit) out.push_back(region_name(kind));
  }
  return out;
}

AcmVerdict acm_verdict(int rank, int degree, int genus) {
  CoverageTable table = acm_coverage(rank, degree, genus);
  return AcmVerdict{table.uncovered.empty(), table.uncovered};
}

bool acm_wrt_power(int rank, int degree, int genus, long long k) {
  if (k < 1) throw DomainError("polarization power must be positive");
  RegionSets sets = make_region_sets(rank, degree, genus);
  // beyond these twists every column is complete on its side
  const long long direct_limit = std::max<long long>(rank, 3);
  const long long fold_limit = -direct_limit - 3;
  for (long long jp = -(direct_limit / k + 4); jp <= direct_limit / k + 4; ++jp) {
    long long t = -1 + k * jp;
    if (t > direct_limit || t < fold_limit) continue;
    if (!column_complete(sets, t)) return false;
  }
  return true;
}

EmbedReport embed_coverage(int rank, int degree, int genus) {
  check_instance(rank, degree, genus);
  EmbedReport report;
  report.rank = rank;
  report.degree = degree;
  report.genus = genus;
  report.n = top_degree(rank, genus);
  report.covered_below = static_cast<long long>(rank - 1) * (genus - 1);
  report.covered_from = static_cast<long long>(rank) * rank;
  for (long long i = 0; i <= report.n; ++i) {
    if (i >= report.covered_below && i < report.covered_from) report.uncovered.push_back(i);
  }
  report.fully_faithful = report.uncovered.empty();
  report.assumptions = {
      {"unit_endomorphisms", "H^0(M, E_x (x) E_x^*) = C"},
      {"no_higher_self_extensions", "H^i(M, E_x (x) E_x^*) = 0 for i >= 2"},
  };
  return report;
}

}  // namespace parwall
