#pragma once

#include "lozenge/oracle.hpp"

#include <string>

namespace lozenge {

// Deterministic SVG 1.1 output, 40 units per lattice edge, elements sorted by
// (y, x, orient). Weighted lozenges are marked with a translucent ellipse.
std::string render_region_svg(const Region& r);
std::string render_tiling_svg(const Region& r, const Tiling& t);

}  // namespace lozenge
