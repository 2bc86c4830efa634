#include "nichols/braiding.hpp"

#include <stdexcept>

namespace nichols {

BraidingMatrix::BraidingMatrix(FieldContextPtr ctx, int n, std::vector<ExactScalar> entries)
    : ctx_(std::move(ctx)), n_(n), q_(std::move(entries)) {
  if (n_ < 1) throw std::invalid_argument("braiding needs n >= 1");
  if (q_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("braiding needs n*n entries");
  for (const ExactScalar& x : q_) {
    if (!(*x.context() == *ctx_)) throw std::invalid_argument("mixed field contexts in braiding");
    if (x.is_zero()) throw std::invalid_argument("braiding entries must be nonzero");
  }
}

BraidingMatrix BraidingMatrix::from_exponents_cyclotomic(long order_n,
                                                         const std::vector<std::vector<long>>& a) {
  const int n = static_cast<int>(a.size());
  FieldContextPtr ctx = FieldContext::make_cyclotomic(order_n);
  std::vector<ExactScalar> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("exponent matrix not square");
    for (long e : row) entries.push_back(ExactScalar::zeta_power(ctx, e));
  }
  return BraidingMatrix(std::move(ctx), n, std::move(entries));
}

BraidingMatrix BraidingMatrix::from_exponents_transcendental(
    const std::vector<std::vector<long>>& a) {
  const int n = static_cast<int>(a.size());
  FieldContextPtr ctx = FieldContext::make_transcendental();
  std::vector<ExactScalar> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("exponent matrix not square");
    for (long e : row) entries.push_back(ExactScalar::t_power(ctx, e));
  }
  return BraidingMatrix(std::move(ctx), n, std::move(entries));
}

BraidingMatrix BraidingMatrix::random_rational(int n, Rng& rng) {
  FieldContextPtr ctx = FieldContext::make_cyclotomic(1);
  std::vector<ExactScalar> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n * n; ++k)
    entries.push_back(ExactScalar::from_rational(ctx, rng.nonzero_rational()));
  return BraidingMatrix(std::move(ctx), n, std::move(entries));
}

const ExactScalar& BraidingMatrix::q(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::invalid_argument("braiding index out of range");
  return q_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

ExactScalar eval(const LaurentMonomial& m, const BraidingMatrix& q) {
  ExactScalar acc = ExactScalar::one(q.context());
  for (const auto& [var, e] : m.exponents()) acc = acc * q.q(var.first, var.second).pow(e);
  return acc;
}

ExactScalar eval(const LaurentPolynomial& p, const BraidingMatrix& q) {
  ExactScalar acc = ExactScalar::zero(q.context());
  for (const auto& [m, c] : p.terms()) {
    ExactScalar term = eval(m, q);
    acc += term * ExactScalar::from_rational(q.context(), Rat(c));
  }
  return acc;
}

ExactScalar eval_at(const ZPoly& f, const ExactScalar& x) {
  ExactScalar acc = ExactScalar::zero(x.context());
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * x;
    if (f.coeff(k) != 0) acc += ExactScalar::from_rational(x.context(), Rat(f.coeff(k)));
  }
  return acc;
}

ExactScalar eval(const CyclotomicProductForm& f, const BraidingMatrix& q) {
  const ExactScalar u = eval(f.base, q);
  ExactScalar acc = eval(f.unit, q);
  if (f.sign < 0) acc = -acc;
  for (const auto& [d, mult] : f.multiplicities) {
    if (mult == 0) continue;
    ExactScalar factor = eval_at(cyclotomic(d), u);
    acc = acc * factor.pow(mult);
  }
  return acc;
}

}  // namespace nichols
