#pragma once

#include "lozenge/lattice.hpp"

#include <functional>
#include <vector>

namespace lozenge {

struct Tiling {
  std::vector<LozengeRef> lozenges;  // sorted
  Rat weight;
};

// Exact weighted tiling count M(r) by backtracking search with forced-move
// propagation. The branching triangle is always the least uncovered one in
// (y, x, orient) order. Returns 0 iff the region is untileable.
Rat count_tilings(const Region& r);

// Streams every tiling in a deterministic order (lexicographic by choice
// sequence). The visitor returns false to stop early. No size cap.
void for_each_tiling(const Region& r, const std::function<bool(const Tiling&)>& visit);

inline constexpr std::size_t kDefaultEnumLimit = 60;

// Materializes all tilings; refuses regions larger than `limit` triangles.
std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit = kDefaultEnumLimit);

// Weighted count of tilings fixed setwise by the vertical reflection across
// X = axis2/2. Throws precondition_error if r is not invariant under it.
Rat count_symmetric_vertical(const Region& r, int axis2);

// Same for the horizontal reflection across the lattice line of row line2/2.
Rat count_symmetric_horizontal(const Region& r, int line2);

// True iff at least one tiling exists; stops at the first one found.
bool is_tileable(const Region& r);

}  // namespace lozenge
