#include "lozenge/lgv.hpp"

#include "lozenge/builders.hpp"
#include "lozenge/oracle.hpp"

#include <algorithm>

namespace lozenge {

std::vector<std::pair<int, int>> lgv_sources(int b, int n, const std::vector<int>& u) {
  std::vector<std::pair<int, int>> src;
  src.reserve(b + n);
  for (int i = b; i >= 1; --i) src.emplace_back(i - 1, b - i);
  for (int i = n; i >= 1; --i) src.emplace_back(0, 2 * b + 2 * n - u[i - 1]);
  return src;
}

namespace {

enum class SinkRow { V, Plus };

PathMatrix build_matrix(const Rat& a, int b, int n, const std::vector<int>& u, SinkRow row,
                        bool barred) {
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("path matrix requires |u| = n");
  auto src = lgv_sources(b, n, u);
  const int m = b + n;
  PathMatrix pm;
  pm.n = m;
  pm.entries.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= m; ++j) {
      // Sink j at (a+b+n-j, 2j-2) or (a+b+n-j, 2j-1).
      Rat dx = a + (b + n - j) - src[i].first;
      int dy = (row == SinkRow::V ? 2 * j - 2 : 2 * j - 1) - src[i].second;
      Rat e;
      if (dy < 0) {
        e = 0;
      } else if (!barred) {
        e = binomial_ext(dx + dy, dy);
      } else {
        e = binomial_ext(dx + dy - 1, dy) + binomial_ext(dx + dy - 1, dy - 1) / 2;
      }
      pm.entries[static_cast<std::size_t>(i) * m + (j - 1)] = e;
    }
  }
  return pm;
}

}  // namespace

PathMatrix path_matrix_V(const Rat& a, int b, int n, const std::vector<int>& u) {
  return build_matrix(a, b, n, u, SinkRow::V, false);
}

PathMatrix path_matrix_Vplus(const Rat& a, int b, int n, const std::vector<int>& u) {
  return build_matrix(a, b, n, u, SinkRow::Plus, false);
}

PathMatrix path_matrix_VplusBar(const Rat& a, int b, int n, const std::vector<int>& u) {
  return build_matrix(a, b, n, u, SinkRow::Plus, true);
}

namespace {

Rat bareiss_integer_det(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Rat(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return Rat(sign * m[n - 1][n - 1]);
}

}  // namespace

Rat determinant_exact(std::vector<std::vector<Rat>> m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant requires a square matrix");
  if (n == 0) return Rat(1);

  bool integral = true;
  for (const auto& row : m)
    for (const Rat& e : row)
      if (denominator(e) != 1) {
        integral = false;
        break;
      }
  if (integral) {
    std::vector<std::vector<Int>> im(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) im[i][j] = numerator(m[i][j]);
    return bareiss_integer_det(std::move(im));
  }

  // Rational Gaussian elimination with exact pivoting.
  Rat det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

Rat determinant_exact(const PathMatrix& pm) {
  std::vector<std::vector<Rat>> m(pm.n, std::vector<Rat>(pm.n));
  for (int i = 0; i < pm.n; ++i)
    for (int j = 0; j < pm.n; ++j) m[i][j] = pm.at(i, j);
  return determinant_exact(std::move(m));
}

CauchyBinetReport cauchy_binet_check(const Region& core, int x0, int y0, int h, int a,
                                     bool weighted) {
  if (a < h)
    throw precondition_error("Cauchy-Binet split needs tube length a >= height h");
  const int len2 = 2 * a + 1;
  Region r = tubey({core, x0, y0, h, len2, weighted});

  CauchyBinetReport rep;
  rep.direct = count_tilings(r);

  // Crossing positions along the southeast lattice line through (x0, y0):
  // position p (bottom to top) is the right-leaning lozenge pair at row
  // y0 - 2h + p - 1 with x + y = x0 + y0 - 1.
  LatticeLine line{LineKind::SouthEast, x0 + y0};
  SplitResult ws = split_along_line(r, line);
  std::vector<std::pair<TriRef, TriRef>> pos;  // (up in W, down in E)
  for (int p = 1; p <= 2 * h; ++p) {
    int y = y0 - 2 * h + p - 1;
    int x = x0 + y0 - 1 - y;
    pos.emplace_back(up(x, y), down(x, y));
  }

  rep.expanded = 0;
  std::vector<int> idx(h);
  // Iterate over h-subsets of [2h] in lexicographic order.
  for (int i = 0; i < h; ++i) idx[i] = i;
  for (;;) {
    Region w = ws.p;
    Region e = ws.q;
    bool valid = true;
    for (int i : idx) {
      if (!w.contains(pos[i].first) || !e.contains(pos[i].second)) {
        valid = false;
        break;
      }
      w.erase(pos[i].first);
      e.erase(pos[i].second);
    }
    if (valid) rep.expanded += count_tilings(w) * count_tilings(e);
    ++rep.summands;
    int i = h - 1;
    while (i >= 0 && idx[i] == 2 * h - h + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < h; ++j) idx[j] = idx[j - 1] + 1;
  }
  rep.ok = rep.direct == rep.expanded;
  return rep;
}

}  // namespace lozenge
