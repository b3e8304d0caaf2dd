#include "lozenge/rational.hpp"

namespace lozenge {

std::string to_string(const Rat& r) {
  return r.str();
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rat binomial_ext(const Rat& top, int k) {
  if (k < 0) return Rat(0);
  Rat prod = 1;
  for (int i = 0; i < k; ++i) prod *= top - i;
  return prod / Rat(factorial(k));
}

}  // namespace lozenge
