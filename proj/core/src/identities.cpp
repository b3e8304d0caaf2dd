#include "lozenge/identities.hpp"

#include "lozenge/formulas.hpp"
#include "lozenge/lgv.hpp"
#include "lozenge/oracle.hpp"

#include <algorithm>
#include <memory>

namespace lozenge {

TubeyFamily custom_tubey_family(Region core, int x0, int y0, int h, bool weighted,
                                int len2_offset) {
  TubeyFamily fam;
  fam.h = h;
  fam.weighted = weighted;
  fam.name = "tubey";
  auto core_ptr = std::make_shared<Region>(std::move(core));
  fam.region_at = [=](int a) {
    return tubey({*core_ptr, x0, y0, h, 2 * a + len2_offset, weighted});
  };
  fam.count_at = [=](int a) {
    return count_tilings(tubey({*core_ptr, x0, y0, h, 2 * a + len2_offset, weighted}));
  };
  return fam;
}

namespace {

TubeyFamily det_family(int b, int n, std::vector<int> u, HalfHexVariant variant,
                       const std::string& name) {
  TubeyFamily fam;
  fam.h = b + n;
  fam.weighted = variant == HalfHexVariant::VplusBar;
  fam.name = name;
  auto uu = std::make_shared<std::vector<int>>(std::move(u));
  fam.region_at = [=](int a) { return half_hexagon(a, b, n, *uu, variant); };
  fam.count_at = [=](int a) {
    switch (variant) {
      case HalfHexVariant::V:
        return determinant_exact(path_matrix_V(Rat(a), b, n, *uu));
      case HalfHexVariant::Vplus:
        return determinant_exact(path_matrix_Vplus(Rat(a), b, n, *uu));
      case HalfHexVariant::VplusBar:
        return determinant_exact(path_matrix_VplusBar(Rat(a), b, n, *uu));
    }
    throw std::logic_error("bad variant");
  };
  return fam;
}

}  // namespace

TubeyFamily v_family(int b, int n, std::vector<int> u) {
  return det_family(b, n, std::move(u), HalfHexVariant::V, "V");
}
TubeyFamily vplus_family(int b, int n, std::vector<int> u) {
  return det_family(b, n, std::move(u), HalfHexVariant::Vplus, "Vplus");
}
TubeyFamily vplusbar_family(int b, int n, std::vector<int> u) {
  return det_family(b, n, std::move(u), HalfHexVariant::VplusBar, "VplusBar");
}

namespace {

RatPoly interpolate_family(const TubeyFamily& fam, int degree, std::vector<Rat>& samples) {
  while (static_cast<int>(samples.size()) < degree + 4)
    samples.push_back(fam.count_at(static_cast<int>(samples.size())));
  std::vector<std::pair<Rat, Rat>> pts;
  for (int a = 0; a <= degree + 1; ++a) pts.emplace_back(Rat(a), samples[a]);
  return interpolate(pts);
}

}  // namespace

RatPoly tiling_polynomial(const TubeyFamily& fam, std::optional<int> degree_hint) {
  std::vector<Rat> samples;
  if (degree_hint) {
    int d = std::max(*degree_hint, 0);
    RatPoly p = interpolate_family(fam, d, samples);
    for (int a = d + 2; a <= d + 3; ++a)
      if (p.eval(a) != samples[a])
        throw interpolation_error(
            "family " + fam.name + ": interpolant of degree hint " + std::to_string(d) +
            " misses the verification point a=" + std::to_string(a) + " (expected " +
            to_string(samples[a]) + ", got " + to_string(p.eval(a)) + ")");
    return p;
  }
  constexpr int kMaxAdaptiveDegree = 64;
  for (int d = 0; d <= kMaxAdaptiveDegree; ++d) {
    RatPoly p = interpolate_family(fam, d, samples);
    if (p.eval(d + 2) == samples[d + 2] && p.eval(d + 3) == samples[d + 3]) return p;
  }
  throw interpolation_error("family " + fam.name +
                            ": no polynomial of degree <= 64 matches the sampled counts");
}

int degree_bound_fplus(int b, int n, const std::vector<int>& u) {
  int m = b + n;
  int d = m + m * (m - 1) / 2;
  for (std::size_t i = 0; i < u.size(); ++i)
    d -= underline_stat(b, n, static_cast<int>(i) + 1, u[i]);
  return d;
}

void CheckReport::add(bool pass, const std::string& what, const std::string& lhs,
                      const std::string& rhs) {
  ok = ok && pass;
  lines.push_back(std::string(pass ? "PASS" : "FAIL") + " " + what + " lhs=" + lhs +
                  " rhs=" + rhs);
}

namespace {

// Positions (indices into the boundary cycle) where the triangle has a corner.
std::vector<int> boundary_positions(const TriRef& t, const std::vector<GridPoint>& cycle) {
  std::array<GridPoint, 3> corners;
  if (t.o == Orient::Up)
    corners = {GridPoint{t.x, t.y}, GridPoint{t.x + 1, t.y}, GridPoint{t.x, t.y + 1}};
  else
    corners = {GridPoint{t.x + 1, t.y}, GridPoint{t.x, t.y + 1}, GridPoint{t.x + 1, t.y + 1}};
  std::vector<int> pos;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    for (const GridPoint& c : corners)
      if (cycle[i] == c) pos.push_back(static_cast<int>(i));
  return pos;
}

// True if positions can be chosen in strictly increasing cyclic order
// p1 < p2 < p3 < p4 starting from some rotation.
bool cyclically_ordered(const std::vector<int>& s1, const std::vector<int>& s2,
                        const std::vector<int>& s3, const std::vector<int>& s4, int cycle_len) {
  for (int start : s1) {
    auto rel = [&](int p) { return (p - start + cycle_len) % cycle_len; };
    auto first_after = [&](const std::vector<int>& s, int lo) {
      int best = -1;
      for (int p : s) {
        int q = rel(p);
        if (q > lo && (best < 0 || q < best)) best = q;
      }
      return best;
    };
    int p2 = first_after(s2, 0);
    if (p2 < 0) continue;
    int p3 = first_after(s3, p2);
    if (p3 < 0) continue;
    if (first_after(s4, p3) >= 0) return true;
  }
  return false;
}

}  // namespace

CheckReport check_kuo_four(const Region& r, const TriRef& alpha, const TriRef& beta,
                           const TriRef& gamma, const TriRef& delta, KuoForm form) {
  const std::vector<TriRef> marked{alpha, beta, gamma, delta};
  for (std::size_t i = 0; i < marked.size(); ++i) {
    if (!r.contains(marked[i]))
      throw precondition_error("marked triangle " + to_string(marked[i]) + " is not in the region");
    for (std::size_t j = i + 1; j < marked.size(); ++j)
      if (marked[i] == marked[j])
        throw precondition_error("marked triangles must be distinct");
  }
  if (form == KuoForm::Product) {
    for (const TriRef& t : marked)
      if (t.o != alpha.o)
        throw precondition_error("product-form condensation needs four triangles of one orientation");
  }
  auto cycles = boundary_cycles(r);
  if (cycles.size() != 1)
    throw precondition_error("condensation needs a connected, simply connected region");
  const auto& cycle = cycles[0];
  std::array<std::vector<int>, 4> pos;
  for (int i = 0; i < 4; ++i) {
    pos[i] = boundary_positions(marked[i], cycle);
    if (pos[i].empty())
      throw precondition_error("marked triangle " + to_string(marked[i]) +
                               " does not touch the boundary");
  }
  const int L = static_cast<int>(cycle.size());
  if (!cyclically_ordered(pos[0], pos[1], pos[2], pos[3], L) &&
      !cyclically_ordered(pos[0], pos[3], pos[2], pos[1], L))
    throw precondition_error("marked triangles are not in cyclic order along the boundary");

  auto M = [&](std::vector<TriRef> rem) { return count_tilings(without(r, rem)); };

  CheckReport rep;
  std::string params = to_string(alpha) + " " + to_string(beta) + " " + to_string(gamma) + " " +
                       to_string(delta);
  if (form == KuoForm::Product) {
    rep.name = "kuo-product";
    Rat lhs = M({alpha, gamma}) * M({beta, delta});
    Rat rhs = M({alpha, beta}) * M({gamma, delta}) + M({alpha, delta}) * M({beta, gamma});
    rep.add(lhs == rhs, "kuo-product " + params, to_string(lhs), to_string(rhs));
  } else {
    rep.name = "kuo-sum";
    Rat lhs = M({alpha}) * M({beta, gamma, delta}) + M({gamma}) * M({alpha, beta, delta});
    Rat rhs = M({beta}) * M({alpha, gamma, delta}) + M({delta}) * M({alpha, beta, gamma});
    rep.add(lhs == rhs, "kuo-sum " + params, to_string(lhs), to_string(rhs));
  }
  return rep;
}

KuoConfig kuo_sum_config(int a, int b, int u) {
  if (u <= 2 || u >= b + 2)
    throw precondition_error("one-dent condensation needs 2 < u < b+2");
  KuoConfig cfg;
  cfg.region = half_hexagon_frame(a, b, 1, {}, HalfHexVariant::V);
  cfg.alpha = up(0, -u);
  cfg.beta = up(0, -2);
  cfg.gamma = down(a + b - 1, -(2 * b + 1));
  cfg.delta = up(0, -(b + 2));
  return cfg;
}

KuoConfig kuo_product_config(int a, int b, const std::vector<int>& u) {
  const int n = static_cast<int>(u.size());
  if (n < 2) throw precondition_error("filled-ends condensation needs at least two dents");
  if (u.front() <= 2 || u.back() >= b + 2 * n)
    throw precondition_error("filled-ends condensation needs 2 < u_1 and u_n < b+2n");
  std::vector<int> interior(u.begin() + 1, u.end() - 1);
  KuoConfig cfg;
  cfg.region = half_hexagon_frame(a, b, n, interior, HalfHexVariant::V);
  cfg.alpha = up(0, -2);
  cfg.beta = up(0, -u.front());
  cfg.gamma = up(0, -u.back());
  cfg.delta = up(0, -(b + 2 * n));
  return cfg;
}

CheckReport check_factorization(const Region& r) {
  FactorSplit fs = factorization_split(r);
  Rat lhs = count_tilings(r);
  Rat rhs = count_tilings(fs.rminus) * count_tilings(fs.rplus);
  for (int i = 0; i < fs.k; ++i) rhs *= 2;
  CheckReport rep;
  rep.name = "factorization";
  rep.add(lhs == rhs, "factorization k=" + std::to_string(fs.k), to_string(lhs), to_string(rhs));
  return rep;
}

CheckReport check_halfshift(const TubeyFamily& unweighted, const TubeyFamily& weighted,
                            std::optional<int> degree_hint) {
  RatPoly g = tiling_polynomial(unweighted, degree_hint);
  RatPoly gbar = tiling_polynomial(weighted, degree_hint);
  RatPoly shifted = shift(g, Rat(-1, 2));
  CheckReport rep;
  rep.name = "halfshift";
  rep.add(gbar == shifted, "halfshift " + unweighted.name + "/" + weighted.name,
          to_string(gbar), to_string(shifted));
  return rep;
}

CheckReport check_ciucu_product(int a, int b) {
  // M-(H_{2a,b,b}) * M|(H_{2a,b,b}) = M(H_{2a,b,b})
  Rat lhs = P_minus(Rat(a), b) * P_vert(Rat(a), b);
  Rat rhs = macmahon_P(2 * a, b, b);
  CheckReport rep;
  rep.name = "ciucu";
  rep.add(lhs == rhs, "ciucu a=" + std::to_string(a) + " b=" + std::to_string(b), to_string(lhs),
          to_string(rhs));
  return rep;
}

CheckReport check_splitting(const Region& r, const LatticeLine& line) {
  SplitResult s = split_along_line(r, line);
  CheckReport rep;
  rep.name = "splitting";
  std::string params = "n=" + std::to_string(s.n);
  if (s.n == 0) {
    Rat lhs = count_tilings(r);
    Rat rhs = count_tilings(s.p) * count_tilings(s.q);
    rep.add(lhs == rhs, "splitting " + params, to_string(lhs), to_string(rhs));
  } else if (s.n < 0) {
    Rat lhs = count_tilings(r);
    rep.add(lhs == 0, "splitting " + params, to_string(lhs), "0");
  } else {
    // n > 0: every tiling crosses the line with exactly n lozenges.
    bool all = true;
    for_each_tiling(r, [&](const Tiling& t) {
      int crossings = 0;
      for (const LozengeRef& l : t.lozenges)
        if (lozenge_crosses(l, line)) ++crossings;
      if (crossings != s.n) all = false;
      return all;
    });
    rep.add(all, "splitting " + params + " crossings", all ? std::to_string(s.n) : "mixed",
            std::to_string(s.n));
  }
  return rep;
}

}  // namespace lozenge
