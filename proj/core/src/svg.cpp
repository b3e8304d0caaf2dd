#include "lozenge/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace lozenge {

namespace {

constexpr double kEdge = 40.0;
const double kRow = kEdge * std::sqrt(3.0) / 2.0;

struct Pt {
  double x, y;
};

// Lattice vertex (x, y) in SVG coordinates (y axis points down).
Pt vertex(int x, int y) { return {kEdge * (x + y / 2.0), -kRow * y}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // normalize -0.00
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::array<Pt, 3> tri_pts(const TriRef& t) {
  if (t.o == Orient::Up)
    return {vertex(t.x, t.y), vertex(t.x + 1, t.y), vertex(t.x, t.y + 1)};
  return {vertex(t.x + 1, t.y), vertex(t.x, t.y + 1), vertex(t.x + 1, t.y + 1)};
}

std::array<Pt, 4> loz_pts(const LozengeRef& l) {
  const TriRef u = l.up_tri;
  switch (l.o) {
    case LozOrient::Vertical:
      return {vertex(u.x, u.y + 1), vertex(u.x, u.y), vertex(u.x + 1, u.y - 1),
              vertex(u.x + 1, u.y)};
    case LozOrient::LeftLeaning:
      return {vertex(u.x - 1, u.y + 1), vertex(u.x, u.y), vertex(u.x + 1, u.y),
              vertex(u.x, u.y + 1)};
    case LozOrient::RightLeaning:
      return {vertex(u.x, u.y), vertex(u.x + 1, u.y), vertex(u.x + 1, u.y + 1),
              vertex(u.x, u.y + 1)};
  }
  throw std::logic_error("bad lozenge orientation");
}

const char* loz_fill(LozOrient o) {
  switch (o) {
    case LozOrient::Vertical: return "#80b1d3";
    case LozOrient::LeftLeaning: return "#b3de69";
    case LozOrient::RightLeaning: return "#fdb462";
  }
  return "#ffffff";
}

std::string polygon(const Pt* pts, int n, const std::string& fill) {
  std::string s = "<polygon points=\"";
  for (int i = 0; i < n; ++i) {
    if (i) s += ' ';
    s += fmt(pts[i].x) + "," + fmt(pts[i].y);
  }
  s += "\" fill=\"" + fill + "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
  return s;
}

std::string weight_ellipse(const LozengeRef& l) {
  auto q = loz_pts(l);
  double cx = (q[0].x + q[1].x + q[2].x + q[3].x) / 4.0;
  double cy = (q[0].y + q[1].y + q[2].y + q[3].y) / 4.0;
  return "<ellipse cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
         "\" rx=\"7.00\" ry=\"13.00\" fill=\"#444444\" fill-opacity=\"0.35\"/>\n";
}

std::string document(const Region& r, const std::string& body) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const TriRef& t : r.triangles()) {
    for (const Pt& p : tri_pts(t)) {
      if (first) {
        minx = maxx = p.x;
        miny = maxy = p.y;
        first = false;
      }
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const double m = 10.0;  // margin
  std::string head = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  head += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
          fmt(minx - m) + " " + fmt(miny - m) + " " + fmt(maxx - minx + 2 * m) + " " +
          fmt(maxy - miny + 2 * m) + "\">\n";
  return head + body + "</svg>\n";
}

std::string weight_marks(const Region& r) {
  std::string s;
  std::vector<LozengeRef> marked;
  for (const auto& [loz, w] : r.weights())
    if (w != 1) marked.push_back(loz);
  std::sort(marked.begin(), marked.end());
  for (const LozengeRef& l : marked) s += weight_ellipse(l);
  return s;
}

}  // namespace

std::string render_region_svg(const Region& r) {
  std::string body;
  for (const TriRef& t : r.triangles()) {  // already (y,x,orient) sorted
    auto p = tri_pts(t);
    body += polygon(p.data(), 3, "#f4f4f0");
  }
  body += weight_marks(r);
  return document(r, body);
}

std::string render_tiling_svg(const Region& r, const Tiling& t) {
  std::string body;
  std::vector<LozengeRef> lozenges = t.lozenges;
  std::sort(lozenges.begin(), lozenges.end());
  for (const LozengeRef& l : lozenges) {
    auto p = loz_pts(l);
    body += polygon(p.data(), 4, loz_fill(l.o));
  }
  body += weight_marks(r);
  return document(r, body);
}

}  // namespace lozenge
