#pragma once

#include "lozenge/lattice.hpp"

#include <vector>

namespace lozenge {

// Semiregular hexagon with horizontal sides a, then clockwise b, c; the north
// side's west vertex is at the origin and the region extends south (y < 0).
Region semiregular_hexagon(int a, int b, int c);

// Equiangular hexagon with clockwise sides a, b+t, c, a+t, b, c+t from the
// northern side, with the u_i-th border triangles removed along the northeast
// border and the v_j-th along the northwest border (counted from the north).
// Dent vectors must be strictly increasing with 1 <= u_i <= b+t, 1 <= v_j <= c+t.
Region dented_hexagon(int a, int b, int c, int t, const std::vector<int>& u,
                      const std::vector<int>& v);

enum class HalfHexVariant { V, Vplus, VplusBar };

// Dented half-hexagons: the strictly-west (V) or weakly-west (Vplus) half of
// the vertically symmetric dented hexagon H_{2a,b,b,2n,(u),(u)} about its
// axis X = a. VplusBar is Vplus with the vertical lozenges on the axis given
// weight 1/2. Requires |u| = n with 1 <= u_1 < ... < u_n <= b+2n.
Region half_hexagon(int a, int b, int n, const std::vector<int>& u, HalfHexVariant variant);

// Same but the dent set is any subset of the positions of an n-dent frame
// (used by condensation configurations where some dents are filled in).
Region half_hexagon_frame(int a, int b, int n, const std::vector<int>& dents,
                          HalfHexVariant variant);

// Tube of doubled length len2 (length a = len2/2) and height h: the triangles
// inside the (len2+1)/2 x h*sqrt(3) rectangle whose top-left corner sits at
// the middle of a triangle base. Anchored with the top of its western zigzag
// boundary z at the origin; the tube extends east.
Region tube(int len2, int h);

// Vertical lozenges sharing two edges with the eastern boundary of tube(len2,h).
std::vector<LozengeRef> tube_weighted_lozenges(int len2, int h);

struct TubeySpec {
  Region core;
  int x0 = 0;      // lattice vertex where the top of the tube boundary z sits
  int y0 = 0;
  int h = 1;       // tube height; z has 2h edges
  int len2 = 0;    // doubled tube length
  bool weighted = false;  // halve vertical lozenges along the tube's east boundary
};

// Union of the core and the tube glued along z; errors if they overlap.
Region tubey(const TubeySpec& spec);

struct FactorSplit {
  Region rminus;
  Region rplus;
  int k = 0;      // number of (a_i, b_i) axis label pairs
  int axis2 = 0;  // detected symmetry axis (doubled)
};

// Splits a balanced vertically symmetric region along its symmetry axis:
// axis triangles are labeled a_1, b_1, ..., a_k, b_k top to bottom; rminus is
// the strictly-west part plus down-pointing a_i and up-pointing b_i, rplus the
// complement; vertical lozenges on the axis have their weights halved in both
// parts. Throws precondition_error if the region is not vertically symmetric
// or the axis triangle count is odd.
FactorSplit factorization_split(const Region& r);

enum class LineKind {
  Horizontal,  // lattice line y = k
  NorthEast,   // lattice line x = k (runs 60 degrees)
  SouthEast    // lattice line x + y = k (runs 120 degrees)
};

struct LatticeLine {
  LineKind kind = LineKind::Horizontal;
  int k = 0;
};

struct SplitResult {
  Region p;  // the side whose triangles along the line are up-pointing
  Region q;
  int n = 0;  // #up - #down in p; every tiling crosses the line with n lozenges
};

SplitResult split_along_line(const Region& r, const LatticeLine& line);

// True iff the lozenge's two triangles lie on opposite sides of the line.
bool lozenge_crosses(const LozengeRef& l, const LatticeLine& line);

}  // namespace lozenge
