#pragma once

#include "lozenge/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

// Thrown when an operation's stated precondition is violated (distinct from
// parse/usage errors so the CLI can map it to its own exit code).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Orient : std::uint8_t { Up, Down };

// One unit triangle in sheared integer coordinates. Lattice vertex (x, y)
// sits at Euclidean (x + y/2, y*sqrt(3)/2). Up(x,y) has corners
// (x,y), (x+1,y), (x,y+1); Down(x,y) has corners (x+1,y), (x,y+1), (x+1,y+1).
struct TriRef {
  int x = 0;
  int y = 0;
  Orient o = Orient::Up;

  friend bool operator==(const TriRef&, const TriRef&) = default;
  // Lexicographic by (y, x, orient); this is the processing order used for
  // deterministic search and rendering.
  friend bool operator<(const TriRef& a, const TriRef& b) {
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return static_cast<int>(a.o) < static_cast<int>(b.o);
  }
};

inline TriRef up(int x, int y) { return TriRef{x, y, Orient::Up}; }
inline TriRef down(int x, int y) { return TriRef{x, y, Orient::Down}; }

// The 3 triangles sharing an edge with t:
//   Up(x,y)   <-> Down(x,y), Down(x-1,y), Down(x,y-1)
//   Down(x,y) <-> Up(x,y),   Up(x+1,y),   Up(x,y+1)
std::array<TriRef, 3> adjacent(const TriRef& t);

bool are_adjacent(const TriRef& a, const TriRef& b);

// Doubled Euclidean x of the leftmost/rightmost corner (2X is always integral).
int min_corner_2x(const TriRef& t);
int max_corner_2x(const TriRef& t);

enum class LozOrient : std::uint8_t { Vertical, LeftLeaning, RightLeaning };

// A lozenge, stored canonically as its up-pointing member plus the class:
//   Vertical     = {Up(x,y), Down(x,y-1)}   (horizontal shared edge)
//   LeftLeaning  = {Up(x,y), Down(x-1,y)}
//   RightLeaning = {Up(x,y), Down(x,y)}
struct LozengeRef {
  TriRef up_tri;
  LozOrient o = LozOrient::Vertical;

  TriRef down_tri() const;
  // Builds the canonical form from two adjacent opposite-orientation triangles.
  static LozengeRef of(const TriRef& a, const TriRef& b);

  friend bool operator==(const LozengeRef&, const LozengeRef&) = default;
  friend bool operator<(const LozengeRef& a, const LozengeRef& b) {
    if (a.up_tri != b.up_tri) return a.up_tri < b.up_tri;
    return static_cast<int>(a.o) < static_cast<int>(b.o);
  }
};

// A finite set of triangles plus a weight for some lozenges (absent = 1).
// Regions may be disconnected; every operation treats them purely as values.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<TriRef> tris);

  const std::vector<TriRef>& triangles() const { return tris_; }
  std::size_t size() const { return tris_.size(); }
  bool empty() const { return tris_.empty(); }
  bool contains(const TriRef& t) const;

  int up_count() const;
  int down_count() const;

  void insert(const TriRef& t);
  // Removes t and any weight entry whose lozenge uses t.
  void erase(const TriRef& t);

  // w must be positive and both member triangles must be in the region.
  void set_weight(const LozengeRef& l, const Rat& w);
  Rat weight(const LozengeRef& l) const;
  bool has_weights() const { return !weights_.empty(); }
  const std::map<LozengeRef, Rat>& weights() const { return weights_; }

  std::vector<TriRef> neighbors_in(const TriRef& t) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<TriRef> tris_;  // sorted, unique
  std::map<LozengeRef, Rat> weights_;
};

// Region minus a set of triangles (weights touching them dropped).
Region without(const Region& r, const std::vector<TriRef>& tris);

bool is_balanced(const Region& r);

Region translate(const Region& r, int dx, int dy);

// Reflection across the Euclidean vertical line X = axis2/2. Orientations are
// preserved: Up(x,y) -> Up(axis2-x-y-1, y), Down(x,y) -> Down(axis2-x-y-2, y).
Region reflect_vertical(const Region& r, int axis2);
TriRef reflect_vertical(const TriRef& t, int axis2);

// Reflection across the horizontal lattice line of row index line2/2 (line2
// must be even). Orientations swap: Up(x,y) -> Down(x+y-r, 2r-y-1) with
// r = line2/2, and symmetrically for Down.
Region reflect_horizontal(const Region& r, int line2);
TriRef reflect_horizontal(const TriRef& t, int line2);

LozengeRef reflect_vertical(const LozengeRef& l, int axis2);
LozengeRef reflect_horizontal(const LozengeRef& l, int line2);

// Translation-normalized form: minimal x and minimal y shifted to 0. Two
// regions are translates of each other iff their canonical forms are equal.
Region canonical_form(const Region& r);

struct ForcedReduction {
  Region region;                    // what is left after the fixed point
  Rat factor;                       // product of removed lozenge weights; 0 if untileable
  std::vector<LozengeRef> forced;   // the removed lozenges, in removal order
  bool untileable = false;          // some triangle ended up with no partner
};

// Repeatedly removes lozenges forced by degree-1 triangles, processing
// triangles in (y, x, orient) order, until a fixed point. M(r) equals
// factor * M(result.region); untileable regions report factor 0.
ForcedReduction remove_forced(const Region& r);

struct GridPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend bool operator<(const GridPoint& a, const GridPoint& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  }
};

// Boundary cycles of the region as vertex sequences, each traversed with the
// region on the left (outer boundary counterclockwise). A connected, simply
// connected region has exactly one cycle.
std::vector<std::vector<GridPoint>> boundary_cycles(const Region& r);

std::string to_string(const TriRef& t);

}  // namespace lozenge
