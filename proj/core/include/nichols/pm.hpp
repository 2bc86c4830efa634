#pragma once

#include <map>
#include <set>
#include <string>

#include "nichols/laurent.hpp"
#include "nichols/words.hpp"

namespace nichols {

// The eight shapes of degree vectors in the definition of P_m.
enum class PmCaseTag {
  SingleLetter,  // m = m_i e_i
  OnePlusK,      // m = e_i + m_j e_j
  TwoPlusK,      // m = 2 e_i + m_j e_j
  ThreeThree,    // m = 3 e_i + 3 e_j
  ThreeFour,     // m = 3 e_i + 4 e_j
  ThreeSix,      // m = 3 e_i + 6 e_j
  FourFour,      // m = 4 e_i + 4 e_j
  Generic,
};

struct PmCase {
  PmCaseTag tag;
  int i = 0;  // letter carrying the small entry (or the only one)
  int j = 0;  // letter carrying m_j, 0 when unused
};

const char* pm_case_name(PmCaseTag tag);

// Classifies m into exactly one case; requires |m| >= 2.  Shapes are matched
// in the order they are listed above, so (2,1) is OnePlusK, not TwoPlusK
// (both produce the same polynomial where they overlap).
PmCase classify(const DegreeVector& m);

// Q_m = prod p_ii^{m_i(m_i-1)/N(m)} prod_{i<j} (p_ij p_ji)^{m_i m_j/N(m)};
// requires |m| >= 2.
LaurentMonomial q_monomial(const DegreeVector& m);

// P_m per the case table; requires |m| >= 2.
LaurentPolynomial p_poly(const DegreeVector& m);

// sign * unit * prod_d Phi_d(base)^{mult[d]} with the base monomial Q_m.
// Multiplicities may be negative, in which case the object denotes a
// rational function and expand() is unavailable.
struct CyclotomicProductForm {
  LaurentMonomial base;
  int sign = 1;
  LaurentMonomial unit;
  std::map<long, long> multiplicities;  // d -> multiplicity, zeros dropped

  bool nonnegative() const;
  std::set<long> support() const;  // d with multiplicity > 0

  // multiply by (1 - base^j)^times; times may be negative
  void mul_one_minus_power(long j, long times);

  LaurentPolynomial expand() const;  // requires nonnegative()
  std::string to_string() const;
};

// Factorization of P_m into distinct Phi_d(Q_m); requires |m| >= 2.
CyclotomicProductForm p_factor_form(const DegreeVector& m);

// A_m as a product of cyclotomic factors of Q_m, built from the Lyndon-count
// exponents of its defining binomial quotient; requires |m| >= 2.
CyclotomicProductForm a_form(const DegreeVector& m);

// Checks that P_m is exactly the product of the distinct irreducible factors
// of A_m (up to sign and a monomial unit, by exact expansion).  Requires m to
// have at least two nonzero entries.
bool radical_identity_check(const DegreeVector& m);

// Structural relative-primality test for P_m, P_l; requires |m|, |l| >= 2 and
// m with at least two nonzero entries.
bool coprime_check(const DegreeVector& m, const DegreeVector& l);

inline LaurentPolynomial ring_one(const LaurentPolynomial&) { return LaurentPolynomial::one(); }
inline ZPoly ring_one(const ZPoly&) { return ZPoly::constant(1); }
inline Rat ring_one(const Rat&) { return Rat(1); }

// (k)_x = 1 + x + ... + x^{k-1}; (0)_x = 0.  Works for any ring element with
// a ring_one overload (polynomials, scalars, rationals).
template <typename Ring>
Ring q_integer(long k, const Ring& x) {
  if (k <= 0) return x - x;
  Ring acc = ring_one(x);
  for (long t = 2; t <= k; ++t) acc = acc * x + ring_one(x);
  return acc;
}

}  // namespace nichols
