#include "lozenge/expr.hpp"

#include "lozenge/region_io.hpp"

#include <cctype>
#include <fstream>

namespace lozenge {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RegionExpr parse() {
    RegionExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input after expression");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw parse_error(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
    if (pos_ == start) fail("expected a constructor name");
    return s_.substr(start, pos_ - start);
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return std::stoi(s_.substr(start, pos_ - start));
  }

  std::vector<int> int_list() {
    expect('[');
    std::vector<int> out;
    if (!peek_is(']')) {
      out.push_back(integer());
      while (peek_is(',')) {
        expect(',');
        out.push_back(integer());
      }
    }
    expect(']');
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
      if (out[i] >= out[i + 1]) fail("list entries must be strictly increasing");
    return out;
  }

  RegionExpr expr() {
    std::size_t name_pos = pos_;
    std::string name = ident();
    expect('(');
    RegionExpr e;
    if (name == "hex") {
      int a = integer();
      expect(',');
      int b = integer();
      expect(',');
      int c = integer();
      e.node = HexNode{a, b, c};
    } else if (name == "dhex") {
      DhexNode n{};
      n.a = integer();
      expect(',');
      n.b = integer();
      expect(',');
      n.c = integer();
      expect(',');
      n.t = integer();
      expect(';');
      n.u = int_list();
      expect(';');
      n.v = int_list();
      e.node = n;
    } else if (name == "V" || name == "Vplus" || name == "VplusBar") {
      HalfHexNode n{};
      n.variant = name == "V"       ? HalfHexVariant::V
                  : name == "Vplus" ? HalfHexVariant::Vplus
                                    : HalfHexVariant::VplusBar;
      n.a = integer();
      expect(',');
      n.b = integer();
      expect(';');
      n.u = int_list();
      e.node = n;
    } else if (name == "tube") {
      int len2 = integer();
      expect(',');
      int h = integer();
      e.node = TubeNode{len2, h};
    } else if (name == "tubey") {
      TubeyNode n{};
      n.core = std::make_shared<RegionExpr>(expr());
      expect(';');
      n.x0 = integer();
      expect(',');
      n.y0 = integer();
      expect(';');
      n.h = integer();
      expect(';');
      n.len2 = integer();
      expect(';');
      int w = integer();
      if (w != 0 && w != 1) fail("tubey weighted flag must be 0 or 1");
      n.weighted = w == 1;
      e.node = n;
    } else if (name == "file") {
      std::string path;
      while (pos_ < s_.size() && s_[pos_] != ')') path += s_[pos_++];
      e.node = FileNode{path};
    } else {
      pos_ = name_pos;
      fail("unknown constructor '" + name + "'");
    }
    expect(')');
    return e;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string print_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

RegionExpr parse_region_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const RegionExpr& e) {
  struct Printer {
    std::string operator()(const HexNode& n) const {
      return "hex(" + std::to_string(n.a) + "," + std::to_string(n.b) + "," +
             std::to_string(n.c) + ")";
    }
    std::string operator()(const DhexNode& n) const {
      return "dhex(" + std::to_string(n.a) + "," + std::to_string(n.b) + "," +
             std::to_string(n.c) + "," + std::to_string(n.t) + ";" + print_list(n.u) + ";" +
             print_list(n.v) + ")";
    }
    std::string operator()(const HalfHexNode& n) const {
      std::string name = n.variant == HalfHexVariant::V       ? "V"
                         : n.variant == HalfHexVariant::Vplus ? "Vplus"
                                                              : "VplusBar";
      return name + "(" + std::to_string(n.a) + "," + std::to_string(n.b) + ";" +
             print_list(n.u) + ")";
    }
    std::string operator()(const TubeNode& n) const {
      return "tube(" + std::to_string(n.len2) + "," + std::to_string(n.h) + ")";
    }
    std::string operator()(const TubeyNode& n) const {
      return "tubey(" + print_expr(*n.core) + ";" + std::to_string(n.x0) + "," +
             std::to_string(n.y0) + ";" + std::to_string(n.h) + ";" + std::to_string(n.len2) +
             ";" + (n.weighted ? "1" : "0") + ")";
    }
    std::string operator()(const FileNode& n) const { return "file(" + n.path + ")"; }
  };
  return std::visit(Printer{}, e.node);
}

Region build_region(const RegionExpr& e) {
  struct Builder {
    Region operator()(const HexNode& n) const { return semiregular_hexagon(n.a, n.b, n.c); }
    Region operator()(const DhexNode& n) const {
      return dented_hexagon(n.a, n.b, n.c, n.t, n.u, n.v);
    }
    Region operator()(const HalfHexNode& n) const {
      return half_hexagon(n.a, n.b, static_cast<int>(n.u.size()), n.u, n.variant);
    }
    Region operator()(const TubeNode& n) const { return tube(n.len2, n.h); }
    Region operator()(const TubeyNode& n) const {
      return tubey({build_region(*n.core), n.x0, n.y0, n.h, n.len2, n.weighted});
    }
    Region operator()(const FileNode& n) const {
      std::ifstream in(n.path);
      if (!in) throw std::invalid_argument("cannot open region file: " + n.path);
      return load_region(in);
    }
  };
  return std::visit(Builder{}, e.node);
}

}  // namespace lozenge
