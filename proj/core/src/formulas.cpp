#include "lozenge/formulas.hpp"

#include <stdexcept>

namespace lozenge {

Rat pochhammer(const Rat& x, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer index must be nonnegative");
  Rat p = 1;
  for (int i = 0; i < k; ++i) p *= x + i;
  return p;
}

Rat macmahon_P(int a, int b, int c) {
  Rat p = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) p *= Rat(i + j + k - 1, i + j + k - 2);
  return p;
}

Rat P_minus(const Rat& a, int b) {
  Rat p = binomial_ext(2 * a + b, b);
  for (int i = 1; i < b; ++i)
    for (int j = i + 1; j <= b; ++j) p *= (2 * a + i + j) / Rat(i + j);
  return p;
}

Rat P_vert(const Rat& a, int b) {
  if (b == 0) return Rat(1);
  Rat den = pochhammer(2 * a + 1, b - 1);
  if (den == 0) throw std::domain_error("P_vert denominator vanishes");
  Rat p = pochhammer(a + 1, b - 1) / den;
  for (int i = 1; i <= b - 1; ++i)
    for (int j = i; j <= b - 1; ++j) p *= (2 * a + i + j - 1) / Rat(i + j - 1);
  return p;
}

int underline_stat(int b, int n, int i, int ui) { return b + n + i - ui; }

namespace {

Rat underline_poch_product(const Rat& base2a, int b, int n, const std::vector<int>& u) {
  // prod_i (base2a + u_i)_{underline(u_i)}
  Rat p = 1;
  for (std::size_t i = 0; i < u.size(); ++i)
    p *= pochhammer(base2a + u[i], underline_stat(b, n, static_cast<int>(i) + 1, u[i]));
  return p;
}

}  // namespace

Rat F_norm(const Rat& a, int b, int n, const std::vector<int>& u) {
  Rat den = underline_poch_product(2 * a, b, n, u);
  if (den == 0) throw std::domain_error("F_norm denominator vanishes at the evaluation point");
  return P_vert(a, b + n) / den;
}

Rat half_hexagon_ratio_eval(const Rat& a, int b, int n, const std::vector<int>& u, const Rat& f0) {
  return f0 * underline_poch_product(Rat(0), b, n, u) * F_norm(a, b, n, u);
}

Rat weighted_half_hexagon_ratio_eval(const Rat& a, int b, int n, const std::vector<int>& u, const Rat& g0) {
  Rat den = underline_poch_product(2 * a, b, n, u);
  if (den == 0) throw std::domain_error("denominator vanishes at the evaluation point");
  return g0 * underline_poch_product(Rat(0), b, n, u) * P_minus(a, b + n) / den;
}

Rat dented_hexagon_ratio_eval(int a, int b, int c, const std::vector<int>& u, const std::vector<int>& v,
                    const Rat& base) {
  const int m = static_cast<int>(u.size());
  const int n = static_cast<int>(v.size());
  Rat val = base;
  // Northeast dents carry the statistic b+n+i-u_i, northwest ones c+m+j-v_j.
  for (int i = 1; i <= m; ++i) val *= pochhammer(Rat(u[i - 1]), underline_stat(b, n, i, u[i - 1]));
  for (int j = 1; j <= n; ++j) val *= pochhammer(Rat(v[j - 1]), underline_stat(c, m, j, v[j - 1]));
  val *= macmahon_P(a, b + n, c + m);
  for (int i = 1; i <= m; ++i) {
    Rat d = pochhammer(Rat(a + u[i - 1]), underline_stat(b, n, i, u[i - 1]));
    if (d == 0) throw std::domain_error("denominator vanishes");
    val /= d;
  }
  for (int j = 1; j <= n; ++j) {
    Rat d = pochhammer(Rat(a + v[j - 1]), underline_stat(c, m, j, v[j - 1]));
    if (d == 0) throw std::domain_error("denominator vanishes");
    val /= d;
  }
  return val;
}

bool hexagon_tileable(int a, int b, int c, int t, const std::vector<int>& u,
                      const std::vector<int>& v) {
  (void)a;
  (void)b;
  (void)c;
  if (static_cast<int>(u.size() + v.size()) != t) return false;  // unbalanced
  int maxn = 0;
  if (!u.empty()) maxn = u.back();
  if (!v.empty()) maxn = std::max(maxn, v.back());
  for (int big = 1; big <= maxn; ++big) {
    int mu = 0;
    for (int ui : u)
      if (ui <= big) ++mu;
    for (int vj : v)
      if (vj <= big) ++mu;
    if (mu > big) return false;
  }
  return true;
}

bool half_hexagon_tileable(const std::vector<int>& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (2 * static_cast<int>(i + 1) > u[i]) return false;
  return true;
}

bool symmetric_tilings_exist(int apar, const std::vector<int>& u) {
  return apar % 2 == 0 && half_hexagon_tileable(u);
}

}  // namespace lozenge
