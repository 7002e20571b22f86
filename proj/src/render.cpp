#include "scfgrid/render.hpp"

#include <sstream>

#include "scfgrid/error.hpp"

namespace scfgrid {

std::string render_ascii(const GridFunction& f, int max_n) {
  const int n = f.n();
  if (n > max_n) {
    throw ResourceError("ASCII rendering limited to n <= " + std::to_string(max_n) + ", got n = " + std::to_string(n));
  }
  std::string out;
  out.reserve(f.grid().size() + static_cast<std::size_t>(n) + 1);
  for (int m = n; m >= 0; --m) {
    for (int k = 0; k + m <= n; ++k) out.push_back(to_char(f.at_unchecked({k, m})));
    out.push_back('\n');
  }
  return out;
}

GridFunction parse_ascii(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl == text.npos ? text.npos : nl - pos));
    if (nl == text.npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw DomainError("empty ASCII grid");

  const int n = static_cast<int>(lines.size()) - 1;
  const Grid g(n);
  std::vector<Alternative> table(g.size());
  for (int row = 0; row <= n; ++row) {
    const std::string_view line = lines[static_cast<std::size_t>(row)];
    if (static_cast<int>(line.size()) != row + 1) {
      throw DomainError("ASCII grid row " + std::to_string(row) + " has " + std::to_string(line.size()) +
                        " cells, expected " + std::to_string(row + 1));
    }
    const int m = n - row;
    for (int k = 0; k <= row; ++k) {
      const char ch = line[static_cast<std::size_t>(k)];
      if (ch != 'a' && ch != 'b') throw DomainError(std::string("invalid ASCII grid cell '") + ch + "'");
      table[g.index({k, m})] = ch == 'a' ? Alternative::A : Alternative::B;
    }
  }
  return GridFunction(g, std::move(table));
}

std::vector<Run> runs(const GridFunction& f) {
  const int n = f.n();
  std::vector<Run> out;
  for (int m = 0; m <= n; ++m) {
    for (int k = 0; k + m <= n; ++k) {
      if (f.at_unchecked({k, m}) != Alternative::A) continue;
      const int start = k;
      while (k + 1 + m <= n && f.at_unchecked({k + 1, m}) == Alternative::A) ++k;
      out.push_back({Alternative::A, {start, m}, {k, m}});
    }
  }
  for (int k = 0; k <= n; ++k) {
    for (int m = 0; k + m <= n; ++m) {
      if (f.at_unchecked({k, m}) != Alternative::B) continue;
      const int start = m;
      while (k + m + 1 <= n && f.at_unchecked({k, m + 1}) == Alternative::B) ++m;
      out.push_back({Alternative::B, {k, start}, {k, m}});
    }
  }
  return out;
}

std::string render_svg(const GridFunction& f, const SvgStyle& style) {
  const int n = f.n();
  const int c = style.cell;
  const int pad = style.margin;
  const int side = n * c + 2 * pad;
  auto x = [&](int k) { return pad + k * c; };
  auto y = [&](int m) { return pad + (n - m) * c; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";

  if (style.gridlines) {
    svg << "<g class=\"grid\" stroke=\"lightgray\" stroke-width=\"1\">\n";
    for (int i = 0; i <= n; ++i) {
      svg << "<line x1=\"" << x(i) << "\" y1=\"" << y(0) << "\" x2=\"" << x(i) << "\" y2=\"" << y(n) << "\"/>\n";
      svg << "<line x1=\"" << x(0) << "\" y1=\"" << y(i) << "\" x2=\"" << x(n) << "\" y2=\"" << y(i) << "\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "<line class=\"diagonal\" x1=\"" << x(0) << "\" y1=\"" << y(n) << "\" x2=\"" << x(n) << "\" y2=\"" << y(0)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  svg << "<g stroke-linecap=\"round\" stroke-width=\"" << style.stroke_width << "\">\n";
  for (const Run& r : runs(f)) {
    const bool a = r.value == Alternative::A;
    svg << "<line class=\"" << (a ? "run-a" : "run-b") << "\" x1=\"" << x(r.from.k) << "\" y1=\"" << y(r.from.m)
        << "\" x2=\"" << x(r.to.k) << "\" y2=\"" << y(r.to.m) << "\" stroke=\""
        << (a ? style.a_color : style.b_color) << "\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace scfgrid
