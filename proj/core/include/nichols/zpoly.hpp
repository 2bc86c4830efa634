#pragma once

#include <string>
#include <vector>

#include "nichols/numeric.hpp"

namespace nichols {

// Univariate polynomial over Z, dense coefficients in ascending degree,
// no trailing zeros (zero polynomial has an empty coefficient vector).
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs);
  static ZPoly constant(Int c);
  static ZPoly monomial(Int c, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Int& coeff(int k) const;                                  // 0 outside range
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& lead() const;

  ZPoly operator-() const;
  friend ZPoly operator+(const ZPoly&, const ZPoly&);
  friend ZPoly operator-(const ZPoly&, const ZPoly&);
  friend ZPoly operator*(const ZPoly&, const ZPoly&);
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

  // Quotient of an exact division; throws if the division leaves a remainder.
  ZPoly divide_exact(const ZPoly& divisor) const;

  Int content() const;           // gcd of coefficients, 0 for zero
  ZPoly primitive_part() const;  // content removed, leading coefficient > 0

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> c_;
};

// gcd in Z[x] via the primitive Euclidean algorithm, returned primitive with
// positive leading coefficient; gcd(0,0) = 0.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);

// k-th cyclotomic polynomial, cached; requires k >= 1.
const ZPoly& cyclotomic(long k);

}  // namespace nichols
