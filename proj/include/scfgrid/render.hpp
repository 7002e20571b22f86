#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scfgrid/grid.hpp"

namespace scfgrid {

// Rows from m = n (top) down to m = 0, each holding 'a'/'b' for k = 0..n-m
// and ending in '\n'. Throws ResourceError when n exceeds max_n.
std::string render_ascii(const GridFunction& f, int max_n = 60);

// Inverse of render_ascii.
GridFunction parse_ascii(std::string_view text);

// Maximal monochrome run: horizontal (fixed m) for a, vertical (fixed k) for b.
struct Run {
  Alternative value;
  GridPoint from;
  GridPoint to;

  int length() const noexcept { return value == Alternative::A ? to.k - from.k + 1 : to.m - from.m + 1; }
};

// a-runs by row (m ascending), then b-runs by column (k ascending). Together
// they cover every grid point exactly once.
std::vector<Run> runs(const GridFunction& f);

struct SvgStyle {
  int cell = 20;
  int margin = 20;
  double stroke_width = 4.0;
  std::string a_color = "magenta";
  std::string b_color = "blue";
  bool gridlines = true;
};

// SVG 1.1 with the origin bottom-left: one <line> per run plus the help grid
// and the diagonal k + m = n.
std::string render_svg(const GridFunction& f, const SvgStyle& style = {});

}  // namespace scfgrid
