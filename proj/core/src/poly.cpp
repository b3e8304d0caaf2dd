#include "lozenge/poly.hpp"

#include <stdexcept>

namespace lozenge {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolation nodes must be distinct");
  if (n == 0) return RatPoly{};

  // Newton divided differences.
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

  // Expand sum_k dd[k] * prod_{i<k} (x - x_i) into monomial coefficients.
  std::vector<Rat> coeffs(n, Rat(0));
  std::vector<Rat> basis{Rat(1)};  // prod so far
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[k] * basis[i];
    if (k + 1 < n) {
      basis.push_back(Rat(0));
      for (std::size_t i = basis.size() - 1; i > 0; --i)
        basis[i] = basis[i - 1] - points[k].first * basis[i];
      basis[0] = -points[k].first * basis[0];
    }
  }
  return RatPoly{std::move(coeffs)};
}

RatPoly shift(const RatPoly& p, const Rat& d) {
  // Horner re-expansion: Q <- Q*(x+d) + c_i over coefficients high to low.
  std::vector<Rat> out;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    out.push_back(Rat(0));
    for (std::size_t i = out.size() - 1; i > 0; --i) out[i] = out[i - 1] + d * out[i];
    out[0] = d * out[0] + *it;
  }
  return RatPoly{std::move(out)};
}

std::string to_string(const RatPoly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ", ";
    s += to_string(p.coeffs()[i]);
  }
  return s + "]";
}

}  // namespace lozenge
