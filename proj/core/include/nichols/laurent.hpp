#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nichols/numeric.hpp"
#include "nichols/zpoly.hpp"

namespace nichols {

// Monomial in the braiding variables p[i][j], integer exponents of either
// sign; zero exponents are not stored.
class LaurentMonomial {
 public:
  LaurentMonomial() = default;
  static LaurentMonomial variable(int i, int j, long e = 1);

  bool is_one() const { return exp_.empty(); }
  long exponent(int i, int j) const;
  const std::map<std::pair<int, int>, long>& exponents() const { return exp_; }
  bool has_negative_exponent() const;

  LaurentMonomial& operator*=(const LaurentMonomial& o);
  friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) { return a *= b; }
  LaurentMonomial inverse() const;
  friend LaurentMonomial operator/(const LaurentMonomial& a, const LaurentMonomial& b) {
    return a * b.inverse();
  }
  LaurentMonomial pow(long k) const;

  friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
  friend bool operator<(const LaurentMonomial& a, const LaurentMonomial& b);

  std::string to_string() const;  // "p[1][2]^2*p[2][1]" ; "1" for the unit

 private:
  std::map<std::pair<int, int>, long> exp_;
};

// Laurent polynomial over Z in the p[i][j]; canonical form keeps no zero
// coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;  // zero
  static LaurentPolynomial zero() { return {}; }
  static LaurentPolynomial one() { return constant(1); }
  static LaurentPolynomial constant(Int c);
  static LaurentPolynomial term(Int c, const LaurentMonomial& m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<LaurentMonomial, Int>& terms() const { return terms_; }
  bool has_negative_exponent() const;
  Int coeff(const LaurentMonomial& m) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial&, const LaurentPolynomial&);
  LaurentPolynomial pow(long k) const;  // k >= 0

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // terms sorted by monomial order, "c * p[i][j]^e * ..." with signs folded
  // into " + " / " - " separators
  std::string to_string() const;

  // JSON: [{"coeff": c, "exps": [[i,j,e], ...]}, ...]
  std::string to_json_string() const;
  static LaurentPolynomial from_json_string(const std::string& json);

 private:
  std::map<LaurentMonomial, Int> terms_;
};

// f = sign * unit * g for a monomial unit?  Returns {sign, unit} if so.
std::optional<std::pair<int, LaurentMonomial>> associate_factor(const LaurentPolynomial& f,
                                                                const LaurentPolynomial& g);

// Substitute the monomial q into a univariate polynomial: sum f_k q^k.
LaurentPolynomial compose(const ZPoly& f, const LaurentMonomial& q);

}  // namespace nichols
