#pragma once

#include "lozenge/builders.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace lozenge {

// Syntax error with the byte offset of the first offending character.
struct parse_error : std::runtime_error {
  parse_error(std::size_t offset, const std::string& msg)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

// Grammar:
//   hex(a,b,c) | dhex(a,b,c,t;[u...];[v...]) | V(a,b;[u...]) | Vplus(a,b;[u...])
//   | VplusBar(a,b;[u...]) | tube(len2,h) | tubey(<expr>;x0,y0;h;len2;w) | file(<path>)
struct RegionExpr;

struct HexNode {
  int a, b, c;
};
struct DhexNode {
  int a, b, c, t;
  std::vector<int> u, v;
};
struct HalfHexNode {
  HalfHexVariant variant;
  int a, b;
  std::vector<int> u;
};
struct TubeNode {
  int len2, h;
};
struct TubeyNode {
  std::shared_ptr<RegionExpr> core;
  int x0, y0, h, len2;
  bool weighted;
};
struct FileNode {
  std::string path;
};

struct RegionExpr {
  std::variant<HexNode, DhexNode, HalfHexNode, TubeNode, TubeyNode, FileNode> node;
};

RegionExpr parse_region_expr(const std::string& text);

// Canonical printing; parse(print(e)) reproduces e.
std::string print_expr(const RegionExpr& e);

// Builds the region (loading file() nodes from disk). Semantic violations
// (dent bounds, overlaps) surface as std::invalid_argument.
Region build_region(const RegionExpr& e);

}  // namespace lozenge
