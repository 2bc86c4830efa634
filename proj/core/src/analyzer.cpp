#include "nichols/analyzer.hpp"

#include <algorithm>
#include <stdexcept>

#include "nichols/pm.hpp"

namespace nichols {

FreenessReport freeness_check(const BraidingMatrix& q, int degree_bound) {
  if (degree_bound < 2) throw std::invalid_argument("degree bound must be >= 2");
  FreenessReport report;
  report.degree_bound = degree_bound;
  std::vector<DegreeVector> zeros;
  for (int s = 2; s <= degree_bound; ++s) {
    for (const DegreeVector& m : degrees_with_total(q.n(), s)) {
      ExactScalar value = eval(p_poly(m), q);
      const bool vanishes = value.is_zero();
      report.values.emplace_back(m, std::move(value));
      if (!vanishes) continue;
      // minimal iff no previously found zero lies strictly below
      const bool minimal = std::none_of(zeros.begin(), zeros.end(), [&](const DegreeVector& z) {
        return componentwise_less(z, m);
      });
      if (minimal) report.witnesses.push_back(m);
      zeros.push_back(m);
    }
  }
  report.free_up_to_bound = report.witnesses.empty();
  return report;
}

std::vector<DegreeVector> minimal_degenerate_degrees(const BraidingMatrix& q, int degree_bound) {
  return freeness_check(q, degree_bound).witnesses;
}

KernelNumbers n1_n2(const BraidingMatrix& q, const DegreeVector& m) {
  if (m.total() < 2) throw std::invalid_argument("n1_n2 needs |m| >= 2");
  if (!eval(p_poly(m), q).is_zero())
    throw HypothesisViolation("P_m(q) != 0 at m = " + m.to_string(), m);
  const auto ord = eval(q_monomial(m), q).multiplicative_order();
  if (!ord) throw HypothesisViolation("Q_m(q) has infinite order at m = " + m.to_string(), m);
  const long N = m.big_n();
  if (N % *ord != 0) throw std::logic_error("ord(Q_m(q)) does not divide N(m)");
  KernelNumbers out;
  out.d = *ord;
  out.d_prime = N / *ord;
  for (int letter = 1; letter <= m.n(); ++letter)
    if (m.count(letter) > 0) out.n1 += lyndon_divisor_sum(m.minus_letter(letter), out.d_prime);
  out.n2 = lyndon_divisor_sum(m, out.d_prime);
  return out;
}

KernelReport kernel_dim(const BraidingMatrix& q, const DegreeVector& m, bool verify) {
  if (m.total() < 2) throw std::invalid_argument("kernel_dim needs |m| >= 2");
  // every l < m with |l| >= 2 must be non-degenerate; scan in graded order so
  // the diagnostic names the lowest offender
  for (int s = 2; s < m.total(); ++s) {
    for (const DegreeVector& l : degrees_with_total(m.n(), s)) {
      if (!componentwise_less(l, m)) continue;
      if (eval(p_poly(l), q).is_zero())
        throw HypothesisViolation("P_l(q) = 0 at l = " + l.to_string() + " < m", l);
    }
  }
  if (!eval(p_poly(m), q).is_zero())
    throw HypothesisViolation("P_m(q) != 0 at m = " + m.to_string(), m);

  KernelReport report;
  report.m = m;
  report.numbers = n1_n2(q, m);
  report.kernel_dim_formula = report.numbers.n1 - report.numbers.n2;
  if (verify) {
    HomogeneousComponent comp(m);
    report.kernel_dim_bruteforce = s1_matrix(m.total() - 1, comp, q).kernel_dim();
    report.relation_dim = symmetrizer_matrix(comp, q).kernel_dim();
  }
  return report;
}

std::vector<std::pair<DegreeVector, long>> relation_dims(const BraidingMatrix& q,
                                                         int degree_bound) {
  if (degree_bound < 2) throw std::invalid_argument("degree bound must be >= 2");
  std::vector<std::pair<DegreeVector, long>> out;
  for (int s = 2; s <= degree_bound; ++s) {
    for (const DegreeVector& m : degrees_with_total(q.n(), s)) {
      HomogeneousComponent comp(m);
      out.emplace_back(m, symmetrizer_matrix(comp, q).kernel_dim());
    }
  }
  return out;
}

BraidingMatrix ExponentBraiding::braiding() const {
  if (mode == Mode::RootOfUnity) return BraidingMatrix::from_exponents_cyclotomic(order_n, a);
  return BraidingMatrix::from_exponents_transcendental(a);
}

std::pair<long, long> k_lambda(const ExponentBraiding& eb, const DegreeVector& m) {
  if (m.n() != eb.n()) throw std::invalid_argument("mismatched alphabet sizes");
  long K = 0, lambda = 0;
  for (int i = 1; i <= m.n(); ++i) {
    lambda += eb.a[i - 1][i - 1] * m.count(i);
    for (int j = 1; j <= m.n(); ++j) K += eb.a[i - 1][j - 1] * m.count(i) * m.count(j);
  }
  return {K, lambda};
}

bool is_exceptional_degree(const DegreeVector& m) {
  if (m.total() < 2) throw std::invalid_argument("is_exceptional_degree needs |m| >= 2");
  if (m.nonzero_letters() == 1) return true;
  if (m.nonzero_letters() != 2) return false;
  int lo = 0, hi = 0;
  for (int letter = 1; letter <= m.n(); ++letter) {
    const int e = m.count(letter);
    if (e == 0) continue;
    if (lo == 0)
      lo = e;
    else
      hi = e;
  }
  if (lo > hi) std::swap(lo, hi);
  if (lo == 2 && hi % 2 == 0) return true;       // 2 e_i + 2m e_j
  if (lo == 3 && hi == 3) return true;           // 3 e_i + 3 e_j
  if (lo == 4 && hi == 4) return true;           // 4 e_i + 4 e_j
  return false;
}

std::vector<DegreeVector> diophantine_search(const ExponentBraiding& eb, int box) {
  if (eb.mode == ExponentBraiding::Mode::RootOfUnity)
    throw std::invalid_argument("criterion requires q not a root of unity");
  if (box < 0) throw std::invalid_argument("box must be nonnegative");
  std::vector<DegreeVector> out;
  std::vector<int> cur(eb.n(), 0);
  auto scan = [&](auto&& self, int pos) -> void {
    if (pos == eb.n()) {
      DegreeVector m{std::vector<int>(cur)};
      if (m.total() < 2 || is_exceptional_degree(m)) return;
      const auto [K, lambda] = k_lambda(eb, m);
      if (K == lambda) out.push_back(m);
      return;
    }
    for (int v = 0; v <= box; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  scan(scan, 0);
  std::sort(out.begin(), out.end(), [](const DegreeVector& x, const DegreeVector& y) {
    return std::pair(x.total(), x.entries()) < std::pair(y.total(), y.entries());
  });
  return out;
}

}  // namespace nichols
