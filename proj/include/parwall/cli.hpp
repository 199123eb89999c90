#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "parwall/chambers.hpp"

namespace parwall::cli {

/// Rendering parameters for the wall diagram. Stroke widths are in
/// thousandths of the unit square; multiple walls must be strictly bolder
/// than simple ones.
struct RenderSpec {
  int canvas_width = 600;
  int canvas_height = 600;
  int simple_stroke_milli = 4;
  int multiple_stroke_milli = 10;
  bool labels = false;
};

/// SVG document for the two-point wall diagram: one line element per wall in
/// canonical order, clipped to the unit square, endpoints printed from exact
/// rationals at fixed precision 6.
std::string render_svg(const std::vector<Wall>& walls, const RenderSpec& spec);
std::string render_svg(const ChamberDecomposition& decomposition, const RenderSpec& spec);

/// Command dispatcher. Returns the process exit code: 0 success, 2 invalid
/// setup or domain, 3 genericity/degenerate-path errors, 64 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parwall::cli
