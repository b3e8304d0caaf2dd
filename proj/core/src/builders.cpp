#include "lozenge/builders.hpp"

#include <algorithm>

namespace lozenge {

namespace {

void validate_dents(const std::vector<int>& d, int hi, const char* side) {
  int prev = 0;
  for (int v : d) {
    if (v <= prev)
      throw std::invalid_argument(std::string("dent indices on the ") + side +
                                  " side must be strictly increasing");
    if (v > hi)
      throw std::invalid_argument(std::string("dent index out of range on the ") + side +
                                  " side: " + std::to_string(v) + " > " + std::to_string(hi));
    prev = v;
  }
}

void require_nonneg(int v, const char* name) {
  if (v < 0) throw std::invalid_argument(std::string(name) + " must be nonnegative");
}

}  // namespace

Region semiregular_hexagon(int a, int b, int c) { return dented_hexagon(a, b, c, 0, {}, {}); }

Region dented_hexagon(int a, int b, int c, int t, const std::vector<int>& u,
                      const std::vector<int>& v) {
  require_nonneg(a, "a");
  require_nonneg(b, "b");
  require_nonneg(c, "c");
  require_nonneg(t, "t");
  validate_dents(u, b + t, "northeast");
  validate_dents(v, c + t, "northwest");

  // Hexagon = intersection of six lattice half-planes:
  //   0 <= x <= a+b+t,  -(b+c+t) <= y <= 0,  -(c+t) <= x+y <= a
  // applied to all corners of each triangle.
  std::vector<TriRef> tris;
  for (int y = -(b + c + t); y <= -1; ++y) {
    for (int x = 0; x <= a + b + t - 1; ++x) {
      if (x + y >= -(c + t) && x + y + 1 <= a) tris.push_back(up(x, y));
      if (x + y + 1 >= -(c + t) && x + y + 2 <= a) tris.push_back(down(x, y));
    }
  }
  Region r{std::move(tris)};
  // The k-th triangle sharing an edge with the NE border is Up(a+k-1, -k);
  // with the NW border it is Up(0, -k).
  for (int ui : u) r.erase(up(a + ui - 1, -ui));
  for (int vj : v) r.erase(up(0, -vj));
  return r;
}

Region half_hexagon_frame(int a, int b, int n, const std::vector<int>& dents,
                          HalfHexVariant variant) {
  require_nonneg(a, "a");
  require_nonneg(b, "b");
  require_nonneg(n, "n");
  validate_dents(dents, b + 2 * n, "northeast");
  Region h = dented_hexagon(2 * a, b, b, 2 * n, dents, dents);
  const int axis2 = 2 * a;  // axis X = a

  Region out;
  for (const TriRef& t : h.triangles()) {
    // strictly west: max corner X <= a; weakly west: min corner X < a.
    bool keep = variant == HalfHexVariant::V ? max_corner_2x(t) <= axis2
                                             : min_corner_2x(t) < axis2;
    if (keep) out.insert(t);
  }
  if (variant == HalfHexVariant::VplusBar) {
    for (const TriRef& t : out.triangles()) {
      if (t.o != Orient::Up || 2 * t.x + t.y != axis2 - 1) continue;
      LozengeRef l{t, LozOrient::Vertical};
      if (out.contains(l.down_tri())) out.set_weight(l, Rat(1, 2));
    }
  }
  return out;
}

Region half_hexagon(int a, int b, int n, const std::vector<int>& u, HalfHexVariant variant) {
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("half-hexagon requires exactly n dent indices");
  return half_hexagon_frame(a, b, n, u, variant);
}

Region tube(int len2, int h) {
  require_nonneg(len2, "len2");
  if (h < 1) throw std::invalid_argument("tube height must be positive");
  std::vector<TriRef> tris;
  for (int y = -2 * h; y <= -1; ++y) {
    for (int s = -2; s <= len2 - 2; ++s) {  // s = 2x + y
      if ((s - y) % 2 != 0) continue;
      int x = (s - y) / 2;
      if (s >= -1 && s <= len2 - 2) tris.push_back(up(x, y));
      if (s >= -2 && s <= len2 - 3) tris.push_back(down(x, y));
    }
  }
  return Region{std::move(tris)};
}

std::vector<LozengeRef> tube_weighted_lozenges(int len2, int h) {
  Region t = tube(len2, h);
  std::vector<LozengeRef> out;
  for (const TriRef& tr : t.triangles()) {
    if (tr.o != Orient::Up || 2 * tr.x + tr.y != len2 - 2) continue;
    LozengeRef l{tr, LozOrient::Vertical};
    if (t.contains(l.down_tri())) out.push_back(l);
  }
  return out;
}

Region tubey(const TubeySpec& spec) {
  Region t = translate(tube(spec.len2, spec.h), spec.x0, spec.y0);
  for (const TriRef& tr : t.triangles())
    if (spec.core.contains(tr))
      throw std::invalid_argument("tubey core and tube overlap at " + to_string(tr));
  Region out = spec.core;
  for (const TriRef& tr : t.triangles()) out.insert(tr);
  for (const auto& [loz, w] : spec.core.weights()) out.set_weight(loz, w);
  if (spec.weighted) {
    for (const LozengeRef& l : tube_weighted_lozenges(spec.len2, spec.h)) {
      LozengeRef moved{TriRef{l.up_tri.x + spec.x0, l.up_tri.y + spec.y0, Orient::Up}, l.o};
      out.set_weight(moved, Rat(1, 2));
    }
  }
  return out;
}

FactorSplit factorization_split(const Region& r) {
  if (r.empty()) throw precondition_error("cannot split an empty region");
  int lo = max_corner_2x(r.triangles()[0]), hi = min_corner_2x(r.triangles()[0]);
  for (const TriRef& t : r.triangles()) {
    lo = std::min(lo, min_corner_2x(t));
    hi = std::max(hi, max_corner_2x(t));
  }
  if ((lo + hi) % 2 != 0 || !(reflect_vertical(r, (lo + hi) / 2) == r))
    throw precondition_error("region is not vertically symmetric");
  const int axis2 = (lo + hi) / 2;

  // Axis triangles: the ones whose interior straddles X = axis2/2.
  std::vector<TriRef> axis;
  for (const TriRef& t : r.triangles()) {
    int s = 2 * t.x + t.y;
    if ((t.o == Orient::Up && s == axis2 - 1) || (t.o == Orient::Down && s == axis2 - 2))
      axis.push_back(t);
  }
  if (axis.size() % 2 != 0)
    throw precondition_error("odd number of axis triangles; labels cannot be paired");
  std::sort(axis.begin(), axis.end(),
            [](const TriRef& a, const TriRef& b) { return b < a; });  // top to bottom

  FactorSplit out;
  out.axis2 = axis2;
  out.k = static_cast<int>(axis.size()) / 2;
  for (const TriRef& t : r.triangles()) {
    bool strict_west = max_corner_2x(t) <= axis2;
    if (strict_west) out.rminus.insert(t);
  }
  for (std::size_t i = 0; i < axis.size(); ++i) {
    bool is_a_label = i % 2 == 0;  // a_1, b_1, a_2, b_2, ... from the top
    if ((is_a_label && axis[i].o == Orient::Down) || (!is_a_label && axis[i].o == Orient::Up))
      out.rminus.insert(axis[i]);
  }
  for (const TriRef& t : r.triangles())
    if (!out.rminus.contains(t)) out.rplus.insert(t);

  auto carry_weights = [&](Region& part) {
    for (const auto& [loz, w] : r.weights())
      if (part.contains(loz.up_tri) && part.contains(loz.down_tri())) part.set_weight(loz, w);
    // Vertical lozenges on the axis get half weight.
    for (const TriRef& t : part.triangles()) {
      if (t.o != Orient::Up || 2 * t.x + t.y != axis2 - 1) continue;
      LozengeRef l{t, LozOrient::Vertical};
      if (part.contains(l.down_tri())) part.set_weight(l, r.weight(l) / 2);
    }
  };
  carry_weights(out.rminus);
  carry_weights(out.rplus);
  return out;
}

namespace {

// True if the triangle lies on the P side (the side whose triangles along the
// line are up-pointing): north of a horizontal line, east of a NE line,
// southwest of a SE line.
bool on_p_side(const TriRef& t, const LatticeLine& line) {
  switch (line.kind) {
    case LineKind::Horizontal:
      return t.y >= line.k;
    case LineKind::NorthEast:
      return t.x >= line.k;
    case LineKind::SouthEast:
      return t.x + t.y + (t.o == Orient::Up ? 1 : 2) <= line.k;
  }
  throw std::logic_error("bad line kind");
}

}  // namespace

SplitResult split_along_line(const Region& r, const LatticeLine& line) {
  SplitResult out;
  for (const TriRef& t : r.triangles())
    (on_p_side(t, line) ? out.p : out.q).insert(t);
  for (const auto& [loz, w] : r.weights()) {
    for (Region* part : {&out.p, &out.q})
      if (part->contains(loz.up_tri) && part->contains(loz.down_tri())) part->set_weight(loz, w);
  }
  // P's triangles along the line are up-pointing by the lattice geometry;
  // verify rather than assume.
  for (const TriRef& t : out.p.triangles()) {
    for (const TriRef& nb : adjacent(t))
      if (out.q.contains(nb) && t.o != Orient::Up)
        throw precondition_error("mixed orientations along the split line");
  }
  out.n = out.p.up_count() - out.p.down_count();
  return out;
}

bool lozenge_crosses(const LozengeRef& l, const LatticeLine& line) {
  return on_p_side(l.up_tri, line) != on_p_side(l.down_tri(), line);
}

}  // namespace lozenge
