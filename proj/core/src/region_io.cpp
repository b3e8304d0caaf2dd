#include "lozenge/region_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace lozenge {

namespace {

Orient parse_orient(const std::string& s, int lineno) {
  if (s == "U") return Orient::Up;
  if (s == "D") return Orient::Down;
  throw std::invalid_argument("line " + std::to_string(lineno) + ": bad orientation '" + s + "'");
}

}  // namespace

Region load_region(std::istream& in) {
  Region r;
  struct PendingWeight {
    LozengeRef loz;
    Rat w;
  };
  std::vector<PendingWeight> weights;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "t") {
      std::string o;
      int x, y;
      if (!(ls >> o >> x >> y))
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad triangle record");
      TriRef t{x, y, parse_orient(o, lineno)};
      if (r.contains(t))
        throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate triangle " +
                                    to_string(t));
      r.insert(t);
    } else if (tag == "w") {
      std::string o1, o2, wstr;
      int x1, y1, x2, y2;
      if (!(ls >> o1 >> x1 >> y1 >> o2 >> x2 >> y2 >> wstr))
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad weight record");
      TriRef t1{x1, y1, parse_orient(o1, lineno)};
      TriRef t2{x2, y2, parse_orient(o2, lineno)};
      try {
        weights.push_back({LozengeRef::of(t1, t2), parse_rational(wstr)});
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
      }
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown record '" + tag +
                                  "'");
    }
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing fields");
  }
  for (const auto& pw : weights) {
    if (!r.contains(pw.loz.up_tri) || !r.contains(pw.loz.down_tri()))
      throw std::invalid_argument("weighted lozenge lies outside the region");
    r.set_weight(pw.loz, pw.w);
  }
  return r;
}

void save_region(const Region& r, std::ostream& out) {
  for (const TriRef& t : r.triangles())
    out << "t " << (t.o == Orient::Up ? "U" : "D") << ' ' << t.x << ' ' << t.y << '\n';
  for (const auto& [loz, w] : r.weights()) {
    TriRef u = loz.up_tri, d = loz.down_tri();
    out << "w U " << u.x << ' ' << u.y << " D " << d.x << ' ' << d.y << ' ' << to_string(w)
        << '\n';
  }
}

}  // namespace lozenge
