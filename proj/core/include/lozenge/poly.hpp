#pragma once

#include "lozenge/rational.hpp"

#include <utility>
#include <vector>

namespace lozenge {

// Univariate polynomial with exact rational coefficients in ascending-degree
// order and no trailing zeros; the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat leading_coefficient() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Rat eval(const Rat& x) const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  std::vector<Rat> coeffs_;
};

// Unique polynomial of degree < #points through the given points, computed by
// exact Newton divided differences. Throws on duplicate abscissae.
RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// q with q(x) = p(x + d) for all x.
RatPoly shift(const RatPoly& p, const Rat& d);

std::string to_string(const RatPoly& p);  // e.g. "[1/2, 1]"

}  // namespace lozenge
