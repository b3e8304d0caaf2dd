#pragma once

#include "lozenge/builders.hpp"
#include "lozenge/poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lozenge {

// A one-parameter family of tubey regions R_z(len2/2) together with the
// counting route used to sample it. The family parameter a maps to the
// doubled tube length len2 = 2a + len2_offset; offset 1 samples the
// half-integer lengths g(a) = M(R_z(a+1/2)), offset 0 the integer ones.
struct TubeyFamily {
  std::function<Region(int a)> region_at;
  std::function<Rat(int a)> count_at;
  int h = 0;
  bool weighted = false;
  std::string name;
};

// Oracle-counted family over an explicit core. The core must not overlap any
// tube T(len2, h) anchored at (x0, y0).
TubeyFamily custom_tubey_family(Region core, int x0, int y0, int h, bool weighted,
                                int len2_offset);

// Determinant-counted dented half-hexagon families (fast path; the oracle
// equivalence of the determinants is established by the test suite).
TubeyFamily v_family(int b, int n, std::vector<int> u);         // len2 = 2a
TubeyFamily vplus_family(int b, int n, std::vector<int> u);     // len2 = 2a+1
TubeyFamily vplusbar_family(int b, int n, std::vector<int> u);  // len2 = 2a+1, weighted

// Thrown when interpolation cross-validation fails (degree hint too small or
// the family is not polynomial over the sampled range).
struct interpolation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interpolates the family's counts at a = 0..D+1 and verifies the polynomial
// at a = D+2 and D+3. With no hint, D grows adaptively until the two
// verification points agree. Never extends a hinted degree silently.
RatPoly tiling_polynomial(const TubeyFamily& fam, std::optional<int> degree_hint = std::nullopt);

// Degree of the tiling polynomial of the Vplus/VplusBar family:
// b + n + C(b+n, 2) - sum_i underline(u_i).
int degree_bound_fplus(int b, int n, const std::vector<int>& u);

struct CheckReport {
  bool ok = true;
  std::string name;
  std::vector<std::string> lines;  // "PASS/FAIL <identity> <params> lhs=<x> rhs=<y>"
  void add(bool pass, const std::string& what, const std::string& lhs, const std::string& rhs);
};

enum class KuoForm { Product, Sum };

// Verifies one of the two condensation identities on r with the four marked
// boundary triangles in cyclic boundary order:
//   Product:  M(R-a-g) M(R-b-d) = M(R-a-b) M(R-g-d) + M(R-a-d) M(R-b-g)
//   Sum:      M(R-a) M(R-b-g-d) + M(R-g) M(R-a-b-d)
//               = M(R-b) M(R-a-g-d) + M(R-d) M(R-a-b-g)
// Throws precondition_error if the triangles are not distinct boundary
// triangles of a simply connected region in cyclic order (either direction),
// or, for Product, not all of one orientation.
CheckReport check_kuo_four(const Region& r, const TriRef& alpha, const TriRef& beta,
                           const TriRef& gamma, const TriRef& delta, KuoForm form);

// The two condensation configurations used for dented half-hexagons. Both
// return the frame region R plus the four marked triangles.
struct KuoConfig {
  Region region;
  TriRef alpha, beta, gamma, delta;
};

// One-dent configuration (Sum form): R is the n=1 half-hexagon frame with the
// dent filled in; alpha sits at NW position u, beta at 2, delta at b+2, and
// gamma is the southmost down-pointing triangle on the eastern side.
KuoConfig kuo_sum_config(int a, int b, int u);

// Filled-ends configuration (Product form): R is the n-dent frame with only
// the interior dents u_2..u_{n-1} removed; alpha at NW position 2, beta at
// u_1, gamma at u_n, delta at b+2n. Requires 2 < u_1 and u_n < b+2n.
KuoConfig kuo_product_config(int a, int b, const std::vector<int>& u);

// M(r) = 2^k M(R-) M(R+) via factorization_split, all counts by enumeration.
CheckReport check_factorization(const Region& r);

// gbar == shift(g, -1/2) as an exact polynomial identity, where g and gbar
// are the tiling polynomials of the two families (same core and z, weighted
// flag differing).
CheckReport check_halfshift(const TubeyFamily& unweighted, const TubeyFamily& weighted,
                            std::optional<int> degree_hint = std::nullopt);

// P_minus(a,b) * P_vert(a,b) == macmahon_P(a,b,b).
CheckReport check_ciucu_product(int a, int b);

// Region splitting along a lattice line: n = 0 forces M(r) = M(P) M(Q) and
// n < 0 forces M(r) = 0.
CheckReport check_splitting(const Region& r, const LatticeLine& line);

}  // namespace lozenge
