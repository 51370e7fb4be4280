#pragma once

#include <string>

#include "ribbon/tiles.hpp"

namespace ribbon {

// Per-cell weight sums over the bounding box of touched cells, top row first:
// digits for 0..9, '+' above 9, '-' for negative sums, '.' for untouched cells.
std::string render_ascii(const SignedTiling& t);

// One outline per placement, filled by tile id, stroked blue (+) or red (-).
std::string render_svg(const SignedTiling& t, int cell_size = 20);

// Boundary loops of a region as corner sequences, counter-clockwise for outer boundaries.
std::vector<std::vector<Cell>> region_outline(const Region& r);

}  // namespace ribbon
