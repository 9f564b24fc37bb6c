#pragma once

#include <string>

#include "core/region.hpp"

namespace dominor {

// ASCII picture: '#'/'o' cells by checkerboard class, '.' covering points on
// the sampled lattice rows, plus the y=0 and y=n guide lines (n < 0 omits it).
std::string render_ascii(const Region& r, int n = -1);

// SVG drawing: cells colored by checkerboard class, covering points as dots,
// y=0 and y=n guide lines.
std::string render_svg(const Region& r, int n = -1);

}  // namespace dominor
