#pragma once

#include "lozenge/lattice.hpp"

#include <utility>
#include <vector>

namespace lozenge {

// Square matrix whose (i,j) entry is the weighted count of east/northeast
// lattice paths from source i to sink j, rows and columns ordered bottom to
// top. Entries are the polynomial-in-a extension of the binomial path counts,
// so the matrix can also be evaluated at rational a.
struct PathMatrix {
  int n = 0;
  std::vector<Rat> entries;  // row-major
  const Rat& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

// Source coordinates for the half-hexagon families, bottom to top:
// (i-1, b-i) for i in [b] along the southwest side, then (0, 2b+2n-u_i) at
// the dents (in descending i so the y-coordinates increase).
std::vector<std::pair<int, int>> lgv_sources(int b, int n, const std::vector<int>& u);

// Sinks are (a+b+n-j, 2j-2) for V and (a+b+n-j, 2j-1) for Vplus/VplusBar.
PathMatrix path_matrix_V(const Rat& a, int b, int n, const std::vector<int>& u);
PathMatrix path_matrix_Vplus(const Rat& a, int b, int n, const std::vector<int>& u);
// Weighted entries C(a+k1+k2-1, k2) + (1/2) C(a+k1+k2-1, k2-1), splitting the
// paths by whether their final step is northeast (which crosses a half-weight
// lozenge).
PathMatrix path_matrix_VplusBar(const Rat& a, int b, int n, const std::vector<int>& u);

// Exact determinant: fraction-free (Bareiss) elimination over the integers
// when every entry is integral, rational Gaussian elimination otherwise.
Rat determinant_exact(const PathMatrix& m);
Rat determinant_exact(std::vector<std::vector<Rat>> m);

struct CauchyBinetReport {
  bool ok = false;
  Rat direct;        // M(R_z(a+1/2)) by enumeration
  Rat expanded;      // sum over h-subsets of crossing positions
  int summands = 0;  // C(2h, h)
};

// Verifies M(R_z(a+1/2)) = sum_{v in C([2h],h)} M(W_v) M(E_v(a)) where the
// region splits along the southeast lattice line through the top of the tube
// boundary z and v picks the crossing-lozenge positions. Both sides are
// computed by the enumeration oracle. Requires a >= h so the line leaves
// through the tube's southern boundary.
CauchyBinetReport cauchy_binet_check(const Region& core, int x0, int y0, int h, int a,
                                     bool weighted = false);

}  // namespace lozenge
