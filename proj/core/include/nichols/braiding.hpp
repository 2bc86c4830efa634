#pragma once

#include <vector>

#include "nichols/laurent.hpp"
#include "nichols/matrix.hpp"
#include "nichols/pm.hpp"
#include "nichols/scalar.hpp"

namespace nichols {

// Diagonal braiding c(x_i (x) x_j) = q_ij x_j (x) x_i with nonzero entries.
class BraidingMatrix {
 public:
  BraidingMatrix(FieldContextPtr ctx, int n, std::vector<ExactScalar> entries);

  // q_ij = zeta_N^{a_ij}
  static BraidingMatrix from_exponents_cyclotomic(long order_n,
                                                  const std::vector<std::vector<long>>& a);
  // q_ij = t^{a_ij}
  static BraidingMatrix from_exponents_transcendental(const std::vector<std::vector<long>>& a);
  // small random nonzero rationals, context Q(zeta_1) = Q
  static BraidingMatrix random_rational(int n, Rng& rng);

  int n() const { return n_; }
  const FieldContextPtr& context() const { return ctx_; }
  const ExactScalar& q(int i, int j) const;  // 1-based

 private:
  FieldContextPtr ctx_;
  int n_;
  std::vector<ExactScalar> q_;
};

// Evaluation homomorphism p_ij -> q_ij.
ExactScalar eval(const LaurentMonomial& m, const BraidingMatrix& q);
ExactScalar eval(const LaurentPolynomial& p, const BraidingMatrix& q);

// Evaluates sign * unit(q) * prod Phi_d(base(q))^mult without expanding.
// Negative multiplicities divide; throws if a factor with negative
// multiplicity evaluates to zero.
ExactScalar eval(const CyclotomicProductForm& f, const BraidingMatrix& q);

// Evaluate a univariate polynomial at a scalar.
ExactScalar eval_at(const ZPoly& f, const ExactScalar& x);

}  // namespace nichols
