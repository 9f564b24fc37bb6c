#include "core/render.hpp"

#include <algorithm>
#include <sstream>

namespace dominor {

namespace {

struct Box {
  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

Box bounds(const Region& r) {
  Box b;
  if (r.empty()) {
    b.xmin = b.xmax = r.anchor ? r.anchor->first : 0;
    b.ymin = b.ymax = r.anchor ? r.anchor->second : 0;
    return b;
  }
  b.xmin = b.xmax = r.cells[0].x;
  b.ymin = b.ymax = r.cells[0].y;
  for (Cell c : r.cells) {
    b.xmin = std::min(b.xmin, c.x);
    b.xmax = std::max(b.xmax, c.x);
    b.ymin = std::min(b.ymin, c.y);
    b.ymax = std::max(b.ymax, c.y);
  }
  return b;
}

}  // namespace

std::string render_ascii(const Region& r, int n) {
  Box b = bounds(r);
  b.ymin = std::min(b.ymin, 0);
  if (n >= 0) b.ymax = std::max(b.ymax, n - 1);
  std::ostringstream out;
  for (int y = b.ymax; y >= b.ymin; --y) {
    out << (y == 0 ? "y0|" : (n >= 0 && y == n ? "yn|" : "  |"));
    for (int x = b.xmin; x <= b.xmax; ++x) {
      if (r.contains({x, y}))
        out << (((x + y) & 1) ? 'o' : '#');
      else
        out << ' ';
    }
    out << '\n';
  }
  return out.str();
}

std::string render_svg(const Region& r, int n) {
  const Box b = bounds(r);
  const int cellpx = 24;
  const int pad = 12;
  const int w = (b.xmax - b.xmin + 1) * cellpx + 2 * pad;
  const int h = (b.ymax - b.ymin + 1) * cellpx + 2 * pad;
  auto px = [&](int x) { return pad + (x - b.xmin) * cellpx; };
  auto py = [&](int y) { return pad + (b.ymax + 1 - y) * cellpx; };  // y axis upward

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (Cell c : r.cells) {
    const bool dark = ((c.x + c.y) & 1) != 0;
    out << "  <rect x=\"" << px(c.x) << "\" y=\"" << py(c.y + 1) << "\" width=\"" << cellpx
        << "\" height=\"" << cellpx << "\" fill=\"" << (dark ? "#b0c4de" : "#f5f5dc")
        << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  }
  auto guide = [&](int y, const char* color, const char* label) {
    out << "  <line x1=\"0\" y1=\"" << py(y) << "\" x2=\"" << w << "\" y2=\"" << py(y)
        << "\" stroke=\"" << color << "\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"/>\n";
    out << "  <text x=\"2\" y=\"" << py(y) - 3 << "\" font-size=\"10\" fill=\"" << color << "\">"
        << label << "</text>\n";
  };
  guide(0, "#2255cc", "y=0");
  if (n >= 0) guide(n, "#cc2222", "y=n");
  for (Point p : covering_points(r)) {
    out << "  <circle cx=\"" << px(p.first) << "\" cy=\"" << py(p.second)
        << "\" r=\"2.5\" fill=\"#c02020\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dominor
