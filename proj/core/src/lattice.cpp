#include "lozenge/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lozenge {

std::array<TriRef, 3> adjacent(const TriRef& t) {
  if (t.o == Orient::Up) {
    return {down(t.x, t.y), down(t.x - 1, t.y), down(t.x, t.y - 1)};
  }
  return {up(t.x, t.y), up(t.x + 1, t.y), up(t.x, t.y + 1)};
}

bool are_adjacent(const TriRef& a, const TriRef& b) {
  for (const TriRef& n : adjacent(a))
    if (n == b) return true;
  return false;
}

int min_corner_2x(const TriRef& t) {
  // Corner with doubled Euclidean x = 2x + y (Up) or 2x + y + 1 (Down).
  return t.o == Orient::Up ? 2 * t.x + t.y : 2 * t.x + t.y + 1;
}

int max_corner_2x(const TriRef& t) {
  return t.o == Orient::Up ? 2 * t.x + t.y + 2 : 2 * t.x + t.y + 3;
}

TriRef LozengeRef::down_tri() const {
  switch (o) {
    case LozOrient::Vertical:
      return down(up_tri.x, up_tri.y - 1);
    case LozOrient::LeftLeaning:
      return down(up_tri.x - 1, up_tri.y);
    case LozOrient::RightLeaning:
      return down(up_tri.x, up_tri.y);
  }
  throw std::logic_error("bad lozenge orientation");
}

LozengeRef LozengeRef::of(const TriRef& a, const TriRef& b) {
  if (a.o == b.o || !are_adjacent(a, b))
    throw std::invalid_argument("lozenge requires two adjacent opposite-orientation triangles");
  const TriRef& u = a.o == Orient::Up ? a : b;
  const TriRef& d = a.o == Orient::Up ? b : a;
  LozOrient o;
  if (d == down(u.x, u.y - 1))
    o = LozOrient::Vertical;
  else if (d == down(u.x - 1, u.y))
    o = LozOrient::LeftLeaning;
  else
    o = LozOrient::RightLeaning;
  return LozengeRef{u, o};
}

Region::Region(std::vector<TriRef> tris) : tris_(std::move(tris)) {
  std::sort(tris_.begin(), tris_.end());
  tris_.erase(std::unique(tris_.begin(), tris_.end()), tris_.end());
}

bool Region::contains(const TriRef& t) const {
  return std::binary_search(tris_.begin(), tris_.end(), t);
}

int Region::up_count() const {
  return static_cast<int>(
      std::count_if(tris_.begin(), tris_.end(), [](const TriRef& t) { return t.o == Orient::Up; }));
}

int Region::down_count() const { return static_cast<int>(tris_.size()) - up_count(); }

void Region::insert(const TriRef& tref) {
  TriRef t = tref;  // tref may alias into tris_
  auto it = std::lower_bound(tris_.begin(), tris_.end(), t);
  if (it != tris_.end() && *it == t) return;
  tris_.insert(it, t);
}

void Region::erase(const TriRef& tref) {
  TriRef t = tref;  // tref may alias into tris_
  auto it = std::lower_bound(tris_.begin(), tris_.end(), t);
  if (it == tris_.end() || *it != t) return;
  tris_.erase(it);
  for (auto w = weights_.begin(); w != weights_.end();) {
    if (w->first.up_tri == t || w->first.down_tri() == t)
      w = weights_.erase(w);
    else
      ++w;
  }
}

void Region::set_weight(const LozengeRef& l, const Rat& w) {
  if (w <= 0) throw std::invalid_argument("lozenge weights must be positive");
  if (!contains(l.up_tri) || !contains(l.down_tri()))
    throw std::invalid_argument("weighted lozenge must lie inside the region");
  if (w == 1)
    weights_.erase(l);
  else
    weights_[l] = w;
}

Rat Region::weight(const LozengeRef& l) const {
  auto it = weights_.find(l);
  return it == weights_.end() ? Rat(1) : it->second;
}

std::vector<TriRef> Region::neighbors_in(const TriRef& t) const {
  std::vector<TriRef> out;
  for (const TriRef& n : adjacent(t))
    if (contains(n)) out.push_back(n);
  return out;
}

Region without(const Region& r, const std::vector<TriRef>& tris) {
  Region out = r;
  for (const TriRef& t : tris) out.erase(t);
  return out;
}

bool is_balanced(const Region& r) { return r.up_count() == r.down_count(); }

namespace {

Region map_region(const Region& r, const auto& tri_map) {
  std::vector<TriRef> tris;
  tris.reserve(r.size());
  for (const TriRef& t : r.triangles()) tris.push_back(tri_map(t));
  Region out{std::move(tris)};
  for (const auto& [loz, w] : r.weights())
    out.set_weight(LozengeRef::of(tri_map(loz.up_tri), tri_map(loz.down_tri())), w);
  return out;
}

}  // namespace

Region translate(const Region& r, int dx, int dy) {
  return map_region(r, [&](const TriRef& t) { return TriRef{t.x + dx, t.y + dy, t.o}; });
}

TriRef reflect_vertical(const TriRef& t, int axis2) {
  if (t.o == Orient::Up) return up(axis2 - t.x - t.y - 1, t.y);
  return down(axis2 - t.x - t.y - 2, t.y);
}

Region reflect_vertical(const Region& r, int axis2) {
  return map_region(r, [&](const TriRef& t) { return reflect_vertical(t, axis2); });
}

TriRef reflect_horizontal(const TriRef& t, int line2) {
  if (line2 % 2 != 0)
    throw precondition_error("horizontal reflection axis must be a lattice line (even line2)");
  const int r = line2 / 2;
  if (t.o == Orient::Up) return down(t.x + t.y - r, 2 * r - t.y - 1);
  return up(t.x + t.y + 1 - r, 2 * r - t.y - 1);
}

Region reflect_horizontal(const Region& r, int line2) {
  return map_region(r, [&](const TriRef& t) { return reflect_horizontal(t, line2); });
}

LozengeRef reflect_vertical(const LozengeRef& l, int axis2) {
  return LozengeRef::of(reflect_vertical(l.up_tri, axis2), reflect_vertical(l.down_tri(), axis2));
}

LozengeRef reflect_horizontal(const LozengeRef& l, int line2) {
  return LozengeRef::of(reflect_horizontal(l.up_tri, line2), reflect_horizontal(l.down_tri(), line2));
}

Region canonical_form(const Region& r) {
  if (r.empty()) return r;
  int minx = r.triangles()[0].x, miny = r.triangles()[0].y;
  for (const TriRef& t : r.triangles()) {
    minx = std::min(minx, t.x);
    miny = std::min(miny, t.y);
  }
  return translate(r, -minx, -miny);
}

ForcedReduction remove_forced(const Region& r) {
  ForcedReduction out;
  out.region = r;
  out.factor = 1;
  for (;;) {
    bool removed = false;
    for (const TriRef& t : out.region.triangles()) {  // (y, x, orient) order
      auto nbrs = out.region.neighbors_in(t);
      if (nbrs.empty()) {
        out.untileable = true;
        out.factor = 0;
        return out;
      }
      if (nbrs.size() == 1) {
        LozengeRef loz = LozengeRef::of(t, nbrs[0]);
        out.factor *= out.region.weight(loz);
        out.forced.push_back(loz);
        out.region.erase(t);
        out.region.erase(nbrs[0]);
        removed = true;
        break;  // the triangle list changed; restart the scan
      }
    }
    if (!removed) return out;
  }
}

namespace {

struct DirEdge {
  GridPoint a, b;
  friend bool operator<(const DirEdge& x, const DirEdge& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator==(const DirEdge&, const DirEdge&) = default;
};

// Counterclockwise corner cycle; the triangle lies on the left of each edge.
std::array<GridPoint, 3> ccw_corners(const TriRef& t) {
  if (t.o == Orient::Up)
    return {GridPoint{t.x, t.y}, GridPoint{t.x + 1, t.y}, GridPoint{t.x, t.y + 1}};
  return {GridPoint{t.x + 1, t.y}, GridPoint{t.x + 1, t.y + 1}, GridPoint{t.x, t.y + 1}};
}

// Neighbor across the i-th ccw edge (corners[i] -> corners[i+1]).
TriRef neighbor_across(const TriRef& t, int i) {
  if (t.o == Orient::Up) {
    switch (i) {
      case 0: return down(t.x, t.y - 1);   // bottom
      case 1: return down(t.x, t.y);       // hypotenuse
      default: return down(t.x - 1, t.y);  // left
    }
  }
  switch (i) {
    case 0: return up(t.x + 1, t.y);  // right
    case 1: return up(t.x, t.y + 1);  // top
    default: return up(t.x, t.y);     // hypotenuse
  }
}

}  // namespace

std::vector<std::vector<GridPoint>> boundary_cycles(const Region& r) {
  // Directed boundary edges with the region on the left, with their owners.
  std::map<DirEdge, TriRef> owner;
  for (const TriRef& t : r.triangles()) {
    auto c = ccw_corners(t);
    for (int i = 0; i < 3; ++i) {
      if (!r.contains(neighbor_across(t, i))) owner[DirEdge{c[i], c[(i + 1) % 3]}] = t;
    }
  }

  // Successor of a boundary edge: pivot around its head through region
  // triangles until the next boundary edge leaving the head is found.
  auto successor = [&](const DirEdge& e) -> DirEdge {
    TriRef tri = owner.at(e);
    for (int guard = 0; guard < 7; ++guard) {
      auto c = ccw_corners(tri);
      int i = 0;
      while (!(c[i] == e.b)) ++i;  // edge of tri starting at the head
      DirEdge next{c[i], c[(i + 1) % 3]};
      TriRef across = neighbor_across(tri, i);
      if (!r.contains(across)) return next;
      tri = across;
      // continue pivoting: the edge of `across` starting at e.b
    }
    throw std::logic_error("boundary pivot failed to terminate");
  };

  std::vector<std::vector<GridPoint>> cycles;
  std::set<DirEdge> seen;
  for (const auto& [e0, tri0] : owner) {
    if (seen.count(e0)) continue;
    std::vector<GridPoint> cycle;
    DirEdge e = e0;
    do {
      seen.insert(e);
      cycle.push_back(e.a);
      e = successor(e);
    } while (!(e == e0));
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::string to_string(const TriRef& t) {
  return std::string(t.o == Orient::Up ? "U" : "D") + "(" + std::to_string(t.x) + "," +
         std::to_string(t.y) + ")";
}

}  // namespace lozenge
