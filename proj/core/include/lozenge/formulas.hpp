#pragma once

#include "lozenge/rational.hpp"

#include <vector>

namespace lozenge {

// Rising factorial (x)_k = x(x+1)...(x+k-1); (x)_0 = 1.
Rat pochhammer(const Rat& x, int k);

// MacMahon box formula: product over [a]x[b]x[c] of (i+j+k-1)/(i+j+k-2).
Rat macmahon_P(int a, int b, int c);

// Count of horizontally symmetric tilings of the hexagon with horizontal
// sides 2a and the other four sides b. Accepts rational a so the value can be
// probed as a polynomial.
Rat P_minus(const Rat& a, int b);

// Count of vertically symmetric tilings of the same hexagon.
Rat P_vert(const Rat& a, int b);

// The dent statistic b + n + i - u_i (i is 1-based).
int underline_stat(int b, int n, int i, int ui);

// P_vert(a, b+n) / prod_i (2a + u_i)_{underline(u_i)}. Throws
// std::domain_error on a zero denominator (possible only for rational probes
// at negative a).
Rat F_norm(const Rat& a, int b, int n, const std::vector<int>& u);

// f(a) = f(0) * prod (u_i)_{u_i_} * P_vert(a, b+n) / prod (2a+u_i)_{u_i_}.
Rat half_hexagon_ratio_eval(const Rat& a, int b, int n, const std::vector<int>& u, const Rat& f0);

// Same with P_minus in place of P_vert; g0 is the weighted count at a = 0.
Rat weighted_half_hexagon_ratio_eval(const Rat& a, int b, int n, const std::vector<int>& u, const Rat& g0);

// Dented-hexagon ratio formula. u holds the m northeast dents and v the n
// northwest dents of H_{a,b,c,m+n,(u),(v)}; base is the count at a = 0.
Rat dented_hexagon_ratio_eval(int a, int b, int c, const std::vector<int>& u, const std::vector<int>& v,
                    const Rat& base);

// Tileability of the dented hexagon H_{a,b,c,t,(u),(v)}: at most N dents may
// lie strictly north of the N-th horizontal lattice line below the north side.
bool hexagon_tileable(int a, int b, int c, int t, const std::vector<int>& u,
                      const std::vector<int>& v);

// Tileability of the dented half-hexagon V_{a,b,n,(u)}: 2i <= u_i for all i.
bool half_hexagon_tileable(const std::vector<int>& u);

// H_{apar,b,b,2n,(u),(u)} has vertically symmetric tilings iff apar is even
// and every 2i <= u_i.
bool symmetric_tilings_exist(int apar, const std::vector<int>& u);

}  // namespace lozenge
