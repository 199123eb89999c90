#include "parwall/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "parwall/errors.hpp"
#include "parwall/picard.hpp"
#include "parwall/vanishing.hpp"

namespace parwall::cli {

namespace {

using nlohmann::json;

constexpr const char* kUsage = R"(usage: parwall <command> [options]

commands:
  info        setup summary: normalization, dimensions, bounds
  walls       enumerate canonical walls
  first-wall  smallest one-point wall value and destabilizer data
  chambers    chamber decomposition of the weight cube
  path        straight-line flip path between two generic weights
  diagram     SVG wall diagram (two-point configuration)
  cones       effective/nef cone data in the divisor lattice
  divisor     divisor class of a weight
  boundary    contractions at the cube edges
  vanishing   vanishing regions for the twist calculus
  acm         intermediate-cohomology coverage table and verdict
  embed       degree-range coverage for the embedding criterion

options:
  -r, --rank INT      bundle rank (r >= 2)
  -d, --degree INT    determinant degree (0 < d < r, coprime to r)
  -g, --genus INT     curve genus (g >= 2; default 2 where it only
                      parameterizes the setup)
  --points {1|2}      number of parabolic points (default 2)
  --weight FRACS      weight as exact fractions, e.g. 1/3,2/5
  --from FRACS        path start weight
  --to FRACS          path end weight
  --side {x|y}        one-point side selector (cones)
  --power INT         polarization power for the acm check
  --size INT          diagram canvas size in pixels (default 600)
  --labels            draw wall labels in the diagram
  --format {json|text}  output format (default json)
  --out FILE          write output to FILE instead of stdout
  -h, --help          this text

exit codes: 0 success, 2 invalid setup or input domain,
3 genericity/degenerate-path errors, 64 usage errors.
)";

struct Options {
  std::string command;
  std::optional<int> rank, degree, genus, points, power, size;
  std::optional<std::string> weight, from, to, side, out;
  bool labels = false;
  std::string format = "json";
};

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

int parse_int_flag(const std::string& flag, const std::string& value) {
  std::size_t pos = 0;
  int out = 0;
  try {
    out = std::stoi(value, &pos);
  } catch (const std::exception&) {
    throw UsageError("flag " + flag + " needs an integer, got '" + value + "'");
  }
  if (pos != value.size()) throw UsageError("flag " + flag + " needs an integer, got '" + value + "'");
  return out;
}

Options parse_args(const std::vector<std::string>& args) {
  Options opt;
  if (args.empty()) throw UsageError("missing command");
  std::size_t i = 0;
  if (args[0] == "-h" || args[0] == "--help") {
    opt.command = "help";
    return opt;
  }
  opt.command = args[i++];
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto need_value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError("flag " + a + " needs a value");
      return args[++i];
    };
    if (a == "-h" || a == "--help") {
      opt.command = "help";
    } else if (a == "-r" || a == "--rank") {
      opt.rank = parse_int_flag(a, need_value());
    } else if (a == "-d" || a == "--degree") {
      opt.degree = parse_int_flag(a, need_value());
    } else if (a == "-g" || a == "--genus") {
      opt.genus = parse_int_flag(a, need_value());
    } else if (a == "--points") {
      opt.points = parse_int_flag(a, need_value());
    } else if (a == "--power") {
      opt.power = parse_int_flag(a, need_value());
    } else if (a == "--size") {
      opt.size = parse_int_flag(a, need_value());
    } else if (a == "--weight") {
      opt.weight = need_value();
    } else if (a == "--from") {
      opt.from = need_value();
    } else if (a == "--to") {
      opt.to = need_value();
    } else if (a == "--side") {
      opt.side = need_value();
    } else if (a == "--out") {
      opt.out = need_value();
    } else if (a == "--labels") {
      opt.labels = true;
    } else if (a == "--format") {
      opt.format = need_value();
      if (opt.format != "json" && opt.format != "text")
        throw UsageError("unknown format '" + opt.format + "'");
    } else {
      throw UsageError("unknown flag '" + a + "'");
    }
  }
  return opt;
}

int require(const std::optional<int>& v, const char* what) {
  if (!v) throw UsageError(std::string("missing required flag --") + what);
  return *v;
}

Weight parse_weight(const std::string& text) {
  Weight out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string part = text.substr(start, comma == std::string::npos ? comma : comma - start);
    auto value = Rational::parse(part);
    if (!value) throw DomainError("weight coordinate '" + part + "' is not a fraction p/q");
    out.push_back(*value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ModuliSetup setup_from(const Options& opt, int default_genus = 2) {
  int r = require(opt.rank, "rank");
  int d = require(opt.degree, "degree");
  int g = opt.genus.value_or(default_genus);
  int k = opt.points.value_or(2);
  if (k == 1) return ModuliSetup::one_point(r, d, g);
  if (k == 2) return ModuliSetup::two_point(r, d, g);
  throw SetupError("--points must be 1 or 2");
}

json rational_json(const Rational& v) { return v.str(); }

json weight_json(const Weight& w) {
  json out = json::array();
  for (const Rational& c : w) out.push_back(rational_json(c));
  return out;
}

json divisor_json(const DivisorClass& c) {
  return json::array({rational_json(c.cx), rational_json(c.cy), rational_json(c.t)});
}

json cone_json(const Cone& cone) {
  json rays = json::array();
  for (const DivisorClass& r : cone.rays) rays.push_back(divisor_json(r));
  json out;
  out["rays"] = rays;
  out["heuristic"] = cone.heuristic;
  return out;
}

std::string kind_name(SlopeKind kind) {
  switch (kind) {
    case SlopeKind::negative: return "negative";
    case SlopeKind::positive: return "positive";
    case SlopeKind::one_point: return "one_point";
  }
  return "unknown";
}

json triple_json(const WallTriple& t) {
  json n = json::array();
  for (int v : t.n) n.push_back(v);
  return json::array({t.s, t.e, n});
}

json wall_json(const Wall& w, const ModuliSetup& setup, bool with_center_dim) {
  json out;
  out["triple"] = triple_json(w.triple);
  json coeffs = json::array();
  for (long long c : w.coeff) coeffs.push_back(c);
  out["hyperplane"] = json{{"coeffs", coeffs}, {"const", w.cst}};
  out["kind"] = kind_name(w.kind);
  out["multiple"] = w.multiple;
  out["gcd_simple"] = w.gcd_simple;
  if (w.kind == SlopeKind::one_point) out["value"] = rational_json(w.value());
  if (with_center_dim) out["center_dim"] = wall_center_dim(w, setup);
  return out;
}

json signs_json(const SignVector& signs) {
  std::string text;
  for (int s : signs) text += s < 0 ? '-' : (s > 0 ? '+' : '0');
  return text;
}

json region_json(const VanishingRegion& region) {
  json out;
  out["name"] = region_name(region.name);
  if (region.i_min) out["i_min"] = *region.i_min;
  if (region.i_max) out["i_max"] = *region.i_max;
  if (region.j_min) {
    out["j_min"] = rational_json(*region.j_min);
    out["j_min_strict"] = region.j_min_strict;
  }
  if (region.j_max) out["j_max"] = *region.j_max;
  return out;
}

json contraction_json(const ContractionDescriptor& c) {
  json out;
  switch (c.kind) {
    case ContractionKind::forgetful: out["kind"] = "forgetful"; break;
    case ContractionKind::hecke: out["kind"] = "hecke"; break;
    case ContractionKind::base: out["kind"] = "base"; break;
  }
  out["rank"] = c.rank;
  out["det_twist"] = c.det_twist;
  if (!c.twist_point.empty()) out["twist_point"] = c.twist_point;
  out["points"] = c.points;
  out["mult"] = c.mult;
  return out;
}

json setup_json(const ModuliSetup& setup) {
  json out;
  out["rank"] = setup.rank();
  out["degree"] = setup.degree();
  out["genus"] = setup.genus();
  out["points"] = setup.points();
  out["mult"] = setup.mult();
  out["ell"] = setup.normalized().ell;
  out["e"] = setup.normalized().e;
  return out;
}

void text_dump(std::ostream& os, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (value.is_object()) {
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (it->is_object() || it->is_array()) {
        os << pad << it.key() << ":\n";
        text_dump(os, *it, indent + 1);
      } else {
        os << pad << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump())
           << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_object() || item.is_array()) {
        os << pad << "-\n";
        text_dump(os, item, indent + 1);
      } else {
        os << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      }
    }
  } else {
    os << pad << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

void emit(const json& doc, const Options& opt, std::ostream& out) {
  std::ostringstream body;
  if (opt.format == "json") {
    body << doc.dump(2) << "\n";
  } else {
    text_dump(body, doc, 0);
  }
  if (opt.out) {
    std::ofstream file(*opt.out, std::ios::binary);
    if (!file) throw DomainError("cannot open output file " + *opt.out);
    file << body.str();
  } else {
    out << body.str();
  }
}

void emit_raw(const std::string& body, const Options& opt, std::ostream& out) {
  if (opt.out) {
    std::ofstream file(*opt.out, std::ios::binary);
    if (!file) throw DomainError("cannot open output file " + *opt.out);
    file << body;
  } else {
    out << body;
  }
}

json cmd_info(const Options& opt) {
  ModuliSetup setup = setup_from(opt);
  int g = require(opt.genus, "genus");
  json out = setup_json(setup);
  out["dim_fixed_det"] = moduli_dim(setup, true);
  out["dim_full"] = moduli_dim(setup, false);
  out["codim_bound"] = codim_bound(setup.rank(), g);
  out["genus_bound_embedding"] = genus_bound_embedding(setup.rank());
  return out;
}

json cmd_walls(const Options& opt) {
  ModuliSetup setup = setup_from(opt);
  json out = setup_json(setup);
  out.erase("genus");
  json walls = json::array();
  for (const Wall& w : enumerate_walls(setup)) walls.push_back(wall_json(w, setup, opt.genus.has_value()));
  out["walls"] = walls;
  return out;
}

json cmd_first_wall(const Options& opt) {
  FirstWall fw = first_wall(require(opt.rank, "rank"), require(opt.degree, "degree"));
  json out;
  out["value"] = rational_json(fw.value);
  out["destabilizer_rank_unit"] = fw.destabilizer_rank_unit;
  out["destabilizer_degree_unit"] = fw.destabilizer_degree_unit;
  out["hecke_boundary"] = fw.hecke_boundary;
  return out;
}

json cmd_chambers(const Options& opt) {
  ModuliSetup setup = setup_from(opt);
  ChamberDecomposition dec = decompose(setup);
  json out = setup_json(setup);
  out.erase("genus");
  json walls = json::array();
  for (const Wall& w : dec.walls) walls.push_back(wall_json(w, setup, false));
  out["walls"] = walls;
  json chambers = json::array();
  for (const Chamber& c : dec.chambers) {
    chambers.push_back(json{{"id", c.id}, {"signs", signs_json(c.signs)}, {"sample", weight_json(c.sample)}});
  }
  out["chambers"] = chambers;
  json adjacency = json::array();
  for (auto [a, b] : dec.adjacency) adjacency.push_back(json::array({a, b}));
  out["adjacency"] = adjacency;
  out["counts"] = json{{"chambers", dec.chambers.size()},
                       {"subdivision_vertices", dec.subdivision_vertices},
                       {"subdivision_edges", dec.subdivision_edges}};
  return out;
}

json cmd_path(const Options& opt) {
  ModuliSetup setup = setup_from(opt);
  if (!opt.from || !opt.to) throw UsageError("path needs --from and --to");
  FlipPath fp = path(parse_weight(*opt.from), parse_weight(*opt.to), setup);
  json out;
  out["from"] = weight_json(fp.start);
  out["to"] = weight_json(fp.end);
  json crossings = json::array();
  for (const Crossing& c : fp.crossings) {
    crossings.push_back(json{{"t", rational_json(c.t)}, {"triple", triple_json(c.wall.triple)}});
  }
  out["crossings"] = crossings;
  return out;
}

json cmd_cones(const Options& opt) {
  ModuliSetup setup = setup_from(opt);
  json out = setup_json(setup);
  if (!opt.genus) out.erase("genus");
  if (setup.k() == 2) {
    out["effective_cone"] = cone_json(effective_cone(setup));
    out["canonical_class"] = divisor_json(canonical_class(setup));
    HeckePullback hx = hecke_pullback_identity(Side::x, setup.rank(), setup.degree());
    HeckePullback hy = hecke_pullback_identity(Side::y, setup.rank(), setup.degree());
    out["hecke_pullback"] = json{
        {"x", json{{"gcd", hx.gcd_k}, {"class", divisor_json(hx.cls)}}},
        {"y", json{{"gcd", hy.gcd_k}, {"class", divisor_json(hy.cls)}}},
    };
    if (opt.weight) {
      ChamberDecomposition dec = decompose(setup);
      Weight a = parse_weight(*opt.weight);
      SignVector signs = locate(a, setup);
      if (!is_generic(signs)) throw GenericityError("--weight lies on a wall");
      for (const Chamber& c : dec.chambers) {
        if (c.signs == signs) {
          out["nef_heuristic"] = cone_json(chamber_nef_heuristic(dec, c.id, setup));
          out["nef_heuristic"]["chamber"] = c.id;
          break;
        }
      }
    }
  } else {
    out["nef_cone_x"] = cone_json(nef_cone_one_point(Side::x, setup));
    out["nef_cone_y"] = cone_json(nef_cone_one_point(Side::y, setup));
    out["canonical_class_x"] = divisor_json(canonical_class(setup, Side::x));
    out["canonical_class_y"] = divisor_json(canonical_class(setup, Side::y));
  }
  if (opt.genus)
    out["det_dual_theta_exponent"] =
        det_dual_theta_exponent(setup.rank(), setup.degree(), setup.genus());
  return out;
}

json cmd_divisor(const Options& opt) {
  ModuliSetup setup = setup_from(opt);
  if (!opt.weight) throw UsageError("divisor needs --weight");
  Weight a = parse_weight(*opt.weight);
  json out;
  out["weight"] = weight_json(a);
  out["class"] = divisor_json(weight_to_divisor(a, setup));
  return out;
}

json cmd_boundary(const Options& opt) {
  ModuliSetup setup = setup_from(opt);
  json edges;
  if (setup.k() == 2) {
    edges["ax0"] = contraction_json(boundary_contraction(CubeEdge::ax0, setup));
    edges["ax1"] = contraction_json(boundary_contraction(CubeEdge::ax1, setup));
    edges["ay0"] = contraction_json(boundary_contraction(CubeEdge::ay0, setup));
    edges["ay1"] = contraction_json(boundary_contraction(CubeEdge::ay1, setup));
  } else {
    edges["ax0"] = contraction_json(boundary_contraction(CubeEdge::ax0, setup));
    edges["ax1"] = contraction_json(boundary_contraction(CubeEdge::ax1, setup));
  }
  json out = setup_json(setup);
  out.erase("genus");
  out["edges"] = edges;
  return out;
}

json cmd_vanishing(const Options& opt) {
  int r = require(opt.rank, "rank");
  int d = require(opt.degree, "degree");
  int g = require(opt.genus, "genus");
  normalize_pair(r, d);
  json out;
  out["rank"] = r;
  out["degree"] = d;
  out["genus"] = g;
  out["n"] = (static_cast<long long>(r) * r - 1) * (g - 1);
  out["regions"] = json::array({region_json(kodaira_region(r, d)), region_json(lepotier_region(r, d)),
                                region_json(flip_region(r, d, g))});
  SerreImage probe = serre_reduce(Cell{0, 0}, r, d, g);
  out["serre"] = json{{"dual_ell", probe.dual_ell}, {"map", "(i, j) -> (n - i, -j - 3)"}};
  return out;
}

json cells_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back(json::array({c.i, c.j}));
  return out;
}

json cmd_acm(const Options& opt) {
  int r = require(opt.rank, "rank");
  int d = require(opt.degree, "degree");
  int g = require(opt.genus, "genus");
  CoverageTable table = acm_coverage(r, d, g);
  json out;
  out["verdict"] = table.uncovered.empty() ? "acm" : "gap";
  out["cells"] = cells_json(table.uncovered);
  out["n"] = table.n;
  out["table"] = json{{"i_min", table.i_min},
                      {"i_max", table.i_max},
                      {"j_min", table.j_min},
                      {"j_max", table.j_max}};
  json regions = json::array();
  for (const VanishingRegion& region : table.regions) regions.push_back(region_json(region));
  out["regions"] = regions;
  if (opt.power) {
    out["power"] = *opt.power;
    out["acm_wrt_power"] = acm_wrt_power(r, d, g, *opt.power);
  }
  return out;
}

json cmd_embed(const Options& opt) {
  int r = require(opt.rank, "rank");
  int d = require(opt.degree, "degree");
  int g = require(opt.genus, "genus");
  EmbedReport report = embed_coverage(r, d, g);
  json out;
  out["rank"] = r;
  out["degree"] = d;
  out["genus"] = g;
  out["n"] = report.n;
  out["covered_below"] = report.covered_below;
  out["covered_from"] = report.covered_from;
  out["uncovered"] = report.uncovered;
  out["fully_faithful"] = report.fully_faithful;
  out["genus_bound"] = genus_bound_embedding(r);
  json assumptions = json::array();
  for (const ExternalAssumption& a : report.assumptions) {
    assumptions.push_back(json{{"name", a.name}, {"statement", a.statement}, {"status", "assumed"}});
  }
  out["assumptions"] = assumptions;
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Wall>& walls, const RenderSpec& spec) {
  for (const Wall& w : walls) {
    if (w.coeff.size() != 2) throw DomainError("diagram rendering needs the two-point configuration");
  }
  if (spec.canvas_width <= 0 || spec.canvas_height <= 0) throw DomainError("canvas size must be positive");
  if (spec.multiple_stroke_milli <= spec.simple_stroke_milli)
    throw DomainError("multiple walls must be strictly bolder than simple walls");

  auto milli = [](int m) { return Rational(m, 1000).fixed_decimal(6); };
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.canvas_width << "\" height=\""
      << spec.canvas_height << "\" viewBox=\"-0.1 -0.1 1.2 1.2\">\n";
  svg << "<g transform=\"matrix(1 0 0 -1 0 1)\" stroke=\"black\" stroke-linecap=\"round\" "
         "fill=\"none\">\n";
  svg << "<rect x=\"0.000000\" y=\"0.000000\" width=\"1.000000\" height=\"1.000000\" stroke-width=\""
      << milli(spec.simple_stroke_milli) << "\"/>\n";
  for (const Wall& w : walls) {
    auto seg = wall_segment_in_square(w);
    svg << "<line x1=\"" << seg[0][0].fixed_decimal(6) << "\" y1=\"" << seg[0][1].fixed_decimal(6)
        << "\" x2=\"" << seg[1][0].fixed_decimal(6) << "\" y2=\"" << seg[1][1].fixed_decimal(6)
        << "\" stroke-width=\"" << milli(w.multiple ? spec.multiple_stroke_milli : spec.simple_stroke_milli)
        << "\"/>\n";
  }
  svg << "</g>\n";
  if (spec.labels) {
    svg << "<g font-family=\"sans-serif\" font-size=\"0.03\" text-anchor=\"middle\" fill=\"black\">\n";
    for (const Wall& w : walls) {
      auto seg = wall_segment_in_square(w);
      Rational half(1, 2);
      Rational mx = (seg[0][0] + seg[1][0]) * half;
      Rational my = (seg[0][1] + seg[1][1]) * half;
      svg << "<text x=\"" << mx.fixed_decimal(6) << "\" y=\"" << (Rational(1) - my).fixed_decimal(6)
          << "\">Δ(" << w.triple.s << "," << w.triple.e << ",(";
      for (std::size_t i = 0; i < w.triple.n.size(); ++i) {
        if (i) svg << ",";
        svg << w.triple.n[i];
      }
      svg << "))</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_svg(const ChamberDecomposition& decomposition, const RenderSpec& spec) {
  return render_svg(decomposition.walls, spec);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  try {
    opt = parse_args(args);
    if (opt.command == "help") {
      out << kUsage;
      return 0;
    }
    json doc;
    if (opt.command == "info") {
      doc = cmd_info(opt);
    } else if (opt.command == "walls") {
      doc = cmd_walls(opt);
    } else if (opt.command == "first-wall") {
      doc = cmd_first_wall(opt);
    } else if (opt.command == "chambers") {
      doc = cmd_chambers(opt);
    } else if (opt.command == "path") {
      doc = cmd_path(opt);
    } else if (opt.command == "diagram") {
      ModuliSetup setup = setup_from(opt);
      if (setup.k() != 2) throw DomainError("diagram rendering needs the two-point configuration");
      RenderSpec spec;
      if (opt.size) {
        spec.canvas_width = *opt.size;
        spec.canvas_height = *opt.size;
      }
      spec.labels = opt.labels;
      emit_raw(render_svg(enumerate_walls(setup), spec), opt, out);
      return 0;
    } else if (opt.command == "cones") {
      doc = cmd_cones(opt);
    } else if (opt.command == "divisor") {
      doc = cmd_divisor(opt);
    } else if (opt.command == "boundary") {
      doc = cmd_boundary(opt);
    } else if (opt.command == "vanishing") {
      doc = cmd_vanishing(opt);
    } else if (opt.command == "acm") {
      doc = cmd_acm(opt);
    } else if (opt.command == "embed") {
      doc = cmd_embed(opt);
    } else {
      throw UsageError("unknown command '" + opt.command + "'");
    }
    emit(doc, opt, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << kUsage;
    return 64;
  } catch (const GenericityError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DegeneratePathError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const SetupError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  }
}

}  // namespace parwall::cli
