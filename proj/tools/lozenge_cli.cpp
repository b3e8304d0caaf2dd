// Command-line front end: exact tiling counts, closed-form evaluation,
// identity verification, polynomial interpolation, path matrices, and SVG
// rendering of regions and tilings.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 parse/usage error,
// 3 precondition violated.

#include "lozenge/expr.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/identities.hpp"
#include "lozenge/lgv.hpp"
#include "lozenge/oracle.hpp"
#include "lozenge/svg.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace lozenge;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

std::size_t enum_limit() {
  if (const char* env = std::getenv("TILE_ENUM_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultEnumLimit;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

// Detects the vertical symmetry axis (doubled) of r, if any.
std::optional<int> vertical_axis(const Region& r) {
  if (r.empty()) return 0;
  int lo = min_corner_2x(r.triangles()[0]), hi = lo;
  for (const TriRef& t : r.triangles()) {
    lo = std::min(lo, min_corner_2x(t));
    hi = std::max(hi, max_corner_2x(t));
  }
  if ((lo + hi) % 2 != 0) return std::nullopt;
  int axis2 = (lo + hi) / 2;
  if (!(reflect_vertical(r, axis2) == r)) return std::nullopt;
  return axis2;
}

std::optional<int> horizontal_axis(const Region& r) {
  if (r.empty()) return 0;
  int lo = r.triangles().front().y, hi = r.triangles().back().y + 1;
  if ((lo + hi) % 2 != 0) return std::nullopt;
  int line2 = lo + hi;
  if (line2 % 2 != 0) return std::nullopt;
  if (!(reflect_horizontal(r, line2) == r)) return std::nullopt;
  return line2;
}

int cmd_count(const std::string& expr_text, const std::string& symmetric) {
  Region r = build_region(parse_region_expr(expr_text));
  Rat result;
  if (symmetric.empty()) {
    result = count_tilings(r);
  } else if (symmetric == "v") {
    auto axis = vertical_axis(r);
    if (!axis) throw precondition_error("region has no vertical symmetry axis");
    result = count_symmetric_vertical(r, *axis);
  } else if (symmetric == "h") {
    auto axis = horizontal_axis(r);
    if (!axis) throw precondition_error("region has no horizontal symmetry axis");
    result = count_symmetric_horizontal(r, *axis);
  } else {
    throw CLI::ValidationError("--symmetric must be 'v' or 'h'");
  }
  std::cout << to_string(result) << "\n";
  return kExitOk;
}

int cmd_formula(const std::string& name, const std::vector<std::string>& args) {
  auto arg_int = [&](std::size_t i) { return std::stoi(args.at(i)); };
  Rat result;
  if (name == "P" && args.size() == 3) {
    result = macmahon_P(arg_int(0), arg_int(1), arg_int(2));
  } else if (name == "Pminus" && args.size() == 2) {
    result = P_minus(Rat(arg_int(0)), arg_int(1));
  } else if (name == "Pvert" && args.size() == 2) {
    result = P_vert(Rat(arg_int(0)), arg_int(1));
  } else if (name == "underline" && args.size() == 4) {
    result = underline_stat(arg_int(0), arg_int(1), arg_int(2), arg_int(3));
  } else if (name == "pochhammer" && args.size() == 2) {
    result = pochhammer(parse_rational(args.at(0)), arg_int(1));
  } else {
    throw CLI::ValidationError(
        "usage: formula P a b c | Pminus a b | Pvert a b | underline b n i ui | pochhammer x k");
  }
  std::cout << to_string(result) << "\n";
  return kExitOk;
}

TriRef parse_tri(const std::string& s) {
  // "U,x,y" or "D,x,y"
  if (s.size() < 2 || (s[0] != 'U' && s[0] != 'D') || s[1] != ',')
    throw CLI::ValidationError("triangle must look like U,x,y or D,x,y");
  auto parts = parse_int_list(s.substr(2));
  if (parts.size() != 2)
    throw CLI::ValidationError("triangle must look like U,x,y or D,x,y");
  return TriRef{parts[0], parts[1], s[0] == 'U' ? Orient::Up : Orient::Down};
}

struct VerifyArgs {
  std::string identity;
  std::string region_text;
  int b = 0, n = 0;
  std::string u_text;
  int a = -1, bpar = -1;
  int amax = 3, bmax = 3;
  std::string alpha, beta, gamma, delta;
  std::string form = "product";
  std::string line_kind;
  int line_k = 0;
  int x0 = 0, y0 = 0, h = 1;
  bool weighted = false;
  std::optional<int> hint;
};

int run_verify(const VerifyArgs& va) {
  std::vector<CheckReport> reports;
  if (va.identity == "halfshift") {
    std::vector<int> u = va.u_text.empty() ? std::vector<int>{} : parse_int_list(va.u_text);
    auto fu = vplus_family(va.b, va.n, u);
    auto fw = vplusbar_family(va.b, va.n, u);
    CheckReport rep = check_halfshift(fu, fw, degree_bound_fplus(va.b, va.n, u));
    rep.lines[0] += " b=" + std::to_string(va.b) + " n=" + std::to_string(va.n);
    reports.push_back(rep);
  } else if (va.identity == "factorization") {
    Region r = build_region(parse_region_expr(va.region_text));
    reports.push_back(check_factorization(r));
  } else if (va.identity == "kuo1" || va.identity == "kuo2") {
    Region r = build_region(parse_region_expr(va.region_text));
    KuoForm form = va.identity == "kuo1" ? KuoForm::Product : KuoForm::Sum;
    reports.push_back(check_kuo_four(r, parse_tri(va.alpha), parse_tri(va.beta),
                                     parse_tri(va.gamma), parse_tri(va.delta), form));
  } else if (va.identity == "splitting") {
    Region r = build_region(parse_region_expr(va.region_text));
    LineKind kind;
    if (va.line_kind == "h") kind = LineKind::Horizontal;
    else if (va.line_kind == "ne") kind = LineKind::NorthEast;
    else if (va.line_kind == "se") kind = LineKind::SouthEast;
    else throw CLI::ValidationError("--line kind must be h, ne or se");
    reports.push_back(check_splitting(r, {kind, va.line_k}));
  } else if (va.identity == "ciucu") {
    if (va.a >= 0 && va.bpar >= 0) {
      reports.push_back(check_ciucu_product(va.a, va.bpar));
    } else {
      for (int a = 0; a <= va.amax; ++a)
        for (int b = 0; b <= va.bmax; ++b) reports.push_back(check_ciucu_product(a, b));
    }
  } else if (va.identity == "cauchybinet") {
    Region core = build_region(parse_region_expr(va.region_text));
    auto rep = cauchy_binet_check(core, va.x0, va.y0, va.h, va.a, va.weighted);
    CheckReport cr;
    cr.name = "cauchybinet";
    cr.add(rep.ok, "cauchybinet h=" + std::to_string(va.h) + " a=" + std::to_string(va.a) +
                       " summands=" + std::to_string(rep.summands),
           to_string(rep.direct), to_string(rep.expanded));
    reports.push_back(cr);
  } else {
    throw CLI::ValidationError("unknown identity: " + va.identity);
  }

  bool all_ok = true;
  for (const CheckReport& rep : reports) {
    for (const std::string& line : rep.lines) std::cout << line << "\n";
    all_ok = all_ok && rep.ok;
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_interpolate(const std::string& family, int b, int n, const std::string& u_text,
                    int x0, int y0, int h, bool weighted, const std::string& core_text,
                    std::optional<int> hint) {
  std::vector<int> u = u_text.empty() ? std::vector<int>{} : parse_int_list(u_text);
  TubeyFamily fam;
  if (family == "V-family") fam = v_family(b, n, u);
  else if (family == "Vplus-family") fam = vplus_family(b, n, u);
  else if (family == "VplusBar-family") fam = vplusbar_family(b, n, u);
  else if (family == "tubey-family") {
    Region core = core_text.empty() ? Region{} : build_region(parse_region_expr(core_text));
    fam = custom_tubey_family(std::move(core), x0, y0, h, weighted, 1);
  } else {
    throw CLI::ValidationError(
        "family must be V-family, Vplus-family, VplusBar-family or tubey-family");
  }
  RatPoly p = tiling_polynomial(fam, hint);
  std::string line;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) line += ' ';
    line += to_string(p.coeffs()[i]);
  }
  std::cout << line << "\n";
  if (p.is_zero()) std::cout << "NOTE: zero polynomial (family is untileable)\n";
  return kExitOk;
}

int cmd_matrix(const std::string& family, int a, int b, const std::string& u_text) {
  std::vector<int> u = u_text.empty() ? std::vector<int>{} : parse_int_list(u_text);
  int n = static_cast<int>(u.size());
  PathMatrix m;
  if (family == "V") m = path_matrix_V(Rat(a), b, n, u);
  else if (family == "Vplus") m = path_matrix_Vplus(Rat(a), b, n, u);
  else if (family == "VplusBar") m = path_matrix_VplusBar(Rat(a), b, n, u);
  else throw CLI::ValidationError("matrix family must be V, Vplus or VplusBar");
  for (int i = 0; i < m.n; ++i) {
    std::string line;
    for (int j = 0; j < m.n; ++j) {
      if (j) line += ' ';
      line += to_string(m.at(i, j));
    }
    std::cout << line << "\n";
  }
  std::cout << "det = " << to_string(determinant_exact(m)) << "\n";
  return kExitOk;
}

int cmd_render(const std::string& expr_text, std::optional<int> tiling_index,
               const std::string& out_path) {
  Region r = build_region(parse_region_expr(expr_text));
  std::string svg;
  if (tiling_index) {
    if (r.size() > enum_limit())
      throw precondition_error("region has " + std::to_string(r.size()) +
                               " triangles, above the enumeration limit of " +
                               std::to_string(enum_limit()) +
                               " (raise TILE_ENUM_LIMIT to allow it)");
    if (*tiling_index < 0)
      throw precondition_error("tiling index must be nonnegative");
    // Stream the deterministic enumeration and stop at the requested index.
    int remaining = *tiling_index;
    bool found = false;
    for_each_tiling(r, [&](const Tiling& t) {
      if (remaining-- > 0) return true;
      svg = render_tiling_svg(r, t);
      found = true;
      return false;
    });
    if (!found)
      throw precondition_error("tiling index " + std::to_string(*tiling_index) +
                               " out of range");
  } else {
    svg = render_region_svg(r);
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw precondition_error("cannot open output file: " + out_path);
  out << svg;
  if (!out) throw precondition_error("failed to write output file: " + out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lozenge-tiling counts, product formulas and identity checks "
               "on the triangular lattice"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "Count weighted tilings of a region");
  std::string count_expr, count_sym;
  count->add_option("expr", count_expr, "Region expression, e.g. hex(2,3,4)")->required();
  count->add_option("--symmetric", count_sym, "Count only symmetric tilings: v or h");

  // formula
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form product formula");
  std::string formula_name;
  std::vector<std::string> formula_args;
  formula->add_option("name", formula_name, "P | Pminus | Pvert | underline | pochhammer")
      ->required();
  formula->add_option("args", formula_args, "Formula arguments");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a tiling identity exactly");
  VerifyArgs va;
  int hint_opt = -1;
  verify->add_option("identity", va.identity,
                     "halfshift | factorization | kuo1 | kuo2 | splitting | ciucu | cauchybinet")
      ->required();
  verify->add_option("--region", va.region_text, "Region (or tubey core) expression");
  verify->add_option("--b", va.b, "b parameter");
  verify->add_option("--n", va.n, "n parameter");
  verify->add_option("--u", va.u_text, "comma-separated dent list");
  verify->add_option("--a", va.a, "a parameter");
  verify->add_option("--bpar", va.bpar, "b parameter (ciucu)");
  verify->add_option("--amax", va.amax, "grid bound for a (ciucu sweep)");
  verify->add_option("--bmax", va.bmax, "grid bound for b (ciucu sweep)");
  verify->add_option("--alpha", va.alpha, "marked triangle U,x,y or D,x,y");
  verify->add_option("--beta", va.beta, "marked triangle");
  verify->add_option("--gamma", va.gamma, "marked triangle");
  verify->add_option("--delta", va.delta, "marked triangle");
  verify->add_option("--line", va.line_kind, "split line kind: h, ne or se");
  verify->add_option("--k", va.line_k, "split line position");
  verify->add_option("--x0", va.x0, "tube anchor x");
  verify->add_option("--y0", va.y0, "tube anchor y");
  verify->add_option("--height", va.h, "tube height");
  verify->add_flag("--weighted", va.weighted, "use the half-weighted tube boundary");
  verify->add_option("--hint", hint_opt, "degree hint for interpolation");

  // interpolate
  auto* interp = app.add_subcommand("interpolate", "Interpolate a family's tiling polynomial");
  std::string fam_name, fam_u, fam_core;
  int fam_b = 0, fam_n = 0, fam_x0 = 0, fam_y0 = 0, fam_h = 1, fam_hint = -1;
  bool fam_weighted = false;
  interp->add_option("family", fam_name, "V-family | Vplus-family | VplusBar-family | tubey-family")
      ->required();
  interp->add_option("--b", fam_b, "b parameter");
  interp->add_option("--n", fam_n, "n parameter");
  interp->add_option("--u", fam_u, "comma-separated dent list");
  interp->add_option("--core", fam_core, "core region expression (tubey-family)");
  interp->add_option("--x0", fam_x0, "tube anchor x");
  interp->add_option("--y0", fam_y0, "tube anchor y");
  interp->add_option("--height", fam_h, "tube height");
  interp->add_flag("--weighted", fam_weighted, "half-weighted tube boundary");
  interp->add_option("--hint", fam_hint, "degree hint");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Print a family's path matrix and determinant");
  std::string mat_family, mat_u;
  int mat_a = 0, mat_b = 0;
  matrix->add_option("family", mat_family, "V | Vplus | VplusBar")->required();
  matrix->add_option("--a", mat_a, "a parameter")->required();
  matrix->add_option("--b", mat_b, "b parameter")->required();
  matrix->add_option("--u", mat_u, "comma-separated dent list");

  // render
  auto* render = app.add_subcommand("render", "Render a region or tiling to SVG");
  std::string render_expr, render_out;
  int render_tiling = -1;
  render->add_option("expr", render_expr, "Region expression")->required();
  render->add_option("out", render_out, "Output SVG path")->required();
  render->add_option("--tiling", render_tiling, "Index of the enumerated tiling to draw");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(count_expr, count_sym);
    if (*formula) return cmd_formula(formula_name, formula_args);
    if (*verify) {
      if (hint_opt >= 0) va.hint = hint_opt;
      return run_verify(va);
    }
    if (*interp) {
      std::optional<int> hint;
      if (fam_hint >= 0) hint = fam_hint;
      return cmd_interpolate(fam_name, fam_b, fam_n, fam_u, fam_x0, fam_y0, fam_h, fam_weighted,
                             fam_core, hint);
    }
    if (*matrix) return cmd_matrix(mat_family, mat_a, mat_b, mat_u);
    if (*render) {
      std::optional<int> idx;
      if (render->count("--tiling")) idx = render_tiling;
      return cmd_render(render_expr, idx, render_out);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const interpolation_error& e) {
    std::cerr << "interpolation failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
