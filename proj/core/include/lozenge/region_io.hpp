#pragma once

#include "lozenge/lattice.hpp"

#include <iosfwd>

namespace lozenge {

// Line-oriented region file format (UTF-8):
//   t U <x> <y>                                  triangle
//   t D <x> <y>
//   w <o1> <x1> <y1> <o2> <x2> <y2> <p>/<q>      lozenge weight
//   # comment
// Order is irrelevant; a duplicate triangle is an error.
Region load_region(std::istream& in);
void save_region(const Region& r, std::ostream& out);

}  // namespace lozenge
