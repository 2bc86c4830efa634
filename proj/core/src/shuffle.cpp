#include "nichols/shuffle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nichols/pm.hpp"

namespace nichols {

HomogeneousComponent::HomogeneousComponent(DegreeVector m) : deg_(std::move(m)) {
  if (deg_.is_zero()) throw std::invalid_argument("component needs m != 0");
  Word w;
  for (int letter = 1; letter <= deg_.n(); ++letter)
    w.insert(w.end(), deg_.count(letter), letter);
  do {
    basis_.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

int HomogeneousComponent::index(const Word& w) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), w);
  if (it == basis_.end() || *it != w) throw std::invalid_argument("word not in component");
  return static_cast<int>(it - basis_.begin());
}

namespace {

// apply sigma_g to w in place, returning the braiding coefficient
ExactScalar apply_sigma(Word& w, int g, const BraidingMatrix& q) {
  const int a = w[g - 1], b = w[g];
  std::swap(w[g - 1], w[g]);
  return q.q(a, b);
}

}  // namespace

OperatorMatrix braid_product_matrix(const std::vector<int>& gens, const HomogeneousComponent& comp,
                                    const BraidingMatrix& q) {
  const int len = comp.degree().total();
  for (int g : gens)
    if (g < 1 || g >= len) throw std::invalid_argument("generator index out of range");
  OperatorMatrix m(q.context(), comp.dim(), comp.dim());
  for (int col = 0; col < comp.dim(); ++col) {
    Word w = comp.word(col);
    ExactScalar c = ExactScalar::one(q.context());
    // rightmost generator acts first
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) c = c * apply_sigma(w, *it, q);
    m.at(comp.index(w), col) = std::move(c);
  }
  return m;
}

OperatorMatrix sigma_matrix(int i, const HomogeneousComponent& comp, const BraidingMatrix& q) {
  return braid_product_matrix({i}, comp, q);
}

OperatorMatrix tau_s1_matrix(int shift, int k, const HomogeneousComponent& comp,
                             const BraidingMatrix& q) {
  const int len = comp.degree().total();
  if (k < 0 || shift < 0 || k + shift > len - 1)
    throw std::invalid_argument("shuffle index out of range");
  OperatorMatrix m = OperatorMatrix::identity(q.context(), comp.dim());
  std::vector<int> gens;
  for (int t = 1; t <= k; ++t) {
    // sigma_{t+shift} sigma_{t-1+shift} ... sigma_{1+shift}
    gens.clear();
    for (int g = t; g >= 1; --g) gens.push_back(g + shift);
    m = m + braid_product_matrix(gens, comp, q);
  }
  return m;
}

OperatorMatrix s1_matrix(int k, const HomogeneousComponent& comp, const BraidingMatrix& q) {
  return tau_s1_matrix(0, k, comp, q);
}

OperatorMatrix symmetrizer_matrix(const HomogeneousComponent& comp, const BraidingMatrix& q) {
  const int len = comp.degree().total();
  if (len < 2) throw std::invalid_argument("symmetrizer needs |m| >= 2");
  OperatorMatrix acc = tau_s1_matrix(len - 2, 1, comp, q);
  for (int j = len - 3; j >= 0; --j) acc = tau_s1_matrix(j, len - 1 - j, comp, q) * acc;
  return acc;
}

bool braid_identity_check(int k, const DegreeVector& m, const BraidingMatrix& q) {
  const int len = m.total();
  if (k < 1 || k > len - 1) throw std::invalid_argument("k out of range");
  HomogeneousComponent comp(m);
  const OperatorMatrix id = OperatorMatrix::identity(q.context(), comp.dim());

  std::vector<int> cycle_gens;
  for (int g = k; g >= 1; --g) cycle_gens.push_back(g);
  std::vector<int> cycle2_gens = cycle_gens;
  cycle2_gens.push_back(1);

  const OperatorMatrix lhs =
      (id - braid_product_matrix(cycle_gens, comp, q)) * s1_matrix(k, comp, q);
  const OperatorMatrix rhs =
      s1_matrix(k - 1, comp, q) * (id - braid_product_matrix(cycle2_gens, comp, q));
  return lhs == rhs;
}

OperatorMatrix cycle_matrix(const HomogeneousComponent& comp, const BraidingMatrix& q) {
  const int len = comp.degree().total();
  std::vector<int> gens;
  for (int g = len - 1; g >= 1; --g) gens.push_back(g);
  return OperatorMatrix::identity(q.context(), comp.dim()) - braid_product_matrix(gens, comp, q);
}

OperatorMatrix cycle2_matrix(const HomogeneousComponent& comp, const BraidingMatrix& q) {
  const int len = comp.degree().total();
  if (len < 2) throw std::invalid_argument("cycle2 needs |m| >= 2");
  std::vector<int> gens;
  for (int g = len - 1; g >= 1; --g) gens.push_back(g);
  gens.push_back(1);
  return OperatorMatrix::identity(q.context(), comp.dim()) - braid_product_matrix(gens, comp, q);
}

namespace {

// d' = N(m)/ord(Q_m(q)) when the order is finite and divides N(m)
std::optional<long> dprime_of(const DegreeVector& m, const BraidingMatrix& q) {
  const auto ord = eval(q_monomial(m), q).multiplicative_order();
  if (!ord) return std::nullopt;
  const long N = m.big_n();
  if (N % *ord != 0) return std::nullopt;
  return N / *ord;
}

}  // namespace

ExactScalar cycle_det(const DegreeVector& m, const BraidingMatrix& q) {
  if (m.is_zero()) throw std::invalid_argument("cycle_det needs m != 0");
  if (m.total() == 1) return ExactScalar::zero(q.context());
  const ExactScalar u = eval(q_monomial(m), q);
  const long N = m.big_n();
  ExactScalar det = ExactScalar::one(q.context());
  const ExactScalar one = ExactScalar::one(q.context());
  for (long k : divisors(m.gcd())) {
    const long e = lyndon_count(m.divided_by(k));
    if (e == 0) continue;
    det = det * (one - u.pow(N / k)).pow(e);
  }
  return det;
}

long cycle_corank(const DegreeVector& m, const BraidingMatrix& q) {
  if (m.is_zero()) throw std::invalid_argument("cycle_corank needs m != 0");
  if (m.total() == 1) return 1;
  const auto dp = dprime_of(m, q);
  return dp ? lyndon_divisor_sum(m, *dp) : 0;
}

ExactScalar cycle2_det(const DegreeVector& m, const BraidingMatrix& q) {
  if (m.total() < 2) throw std::invalid_argument("cycle2_det needs |m| >= 2");
  const ExactScalar u = eval(q_monomial(m), q);
  const long N = m.big_n();
  ExactScalar det = ExactScalar::one(q.context());
  const ExactScalar one = ExactScalar::one(q.context());
  for (int letter = 1; letter <= m.n(); ++letter) {
    if (m.count(letter) == 0) continue;
    const DegreeVector mi = m.minus_letter(letter);
    for (long k : divisors(mi.gcd())) {
      const long e = lyndon_count(mi.divided_by(k));
      if (e == 0) continue;
      det = det * (one - u.pow(N / k)).pow(e);
    }
  }
  return det;
}

long cycle2_corank(const DegreeVector& m, const BraidingMatrix& q) {
  if (m.total() < 2) throw std::invalid_argument("cycle2_corank needs |m| >= 2");
  const auto dp = dprime_of(m, q);
  if (!dp) return 0;
  long total = 0;
  for (int letter = 1; letter <= m.n(); ++letter)
    if (m.count(letter) > 0) total += lyndon_divisor_sum(m.minus_letter(letter), *dp);
  return total;
}

namespace {

Word rotate_left(Word w) {
  if (!w.empty()) std::rotate(w.begin(), w.begin() + 1, w.end());
  return w;
}

Word act(const Word& w, CycleAction action) {
  if (action == CycleAction::Rotate) return rotate_left(w);
  Word tail(w.begin() + 1, w.end());
  tail = rotate_left(std::move(tail));
  Word out{w.front()};
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Word minimal_rotation(const Word& w) {
  Word best = w, cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    cur = rotate_left(std::move(cur));
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

std::vector<Orbit> orbit_decomposition(const DegreeVector& m, CycleAction action) {
  if (m.is_zero()) throw std::invalid_argument("orbit decomposition needs m != 0");
  if (action == CycleAction::FixFirstRotate && m.total() < 2)
    throw std::invalid_argument("fix-first-rotate needs |m| >= 2");
  HomogeneousComponent comp(m);
  std::set<Word> seen;
  std::vector<Orbit> orbits;
  for (const Word& w : comp.basis()) {
    if (seen.count(w)) continue;
    Orbit orbit;
    // representative: the unique v^k (resp. j v^k) in the orbit
    if (action == CycleAction::Rotate) {
      Word rep = minimal_rotation(w);
      auto [root, k] = lyndon_power_factor(rep);
      orbit.lyndon_root = std::move(root);
      orbit.power = k;
      orbit.words.push_back(std::move(rep));
    } else {
      Word tail(w.begin() + 1, w.end());
      Word rep{w.front()};
      Word min_tail = minimal_rotation(tail);
      rep.insert(rep.end(), min_tail.begin(), min_tail.end());
      auto [root, k] = lyndon_power_factor(min_tail);
      orbit.fixed_letter = w.front();
      orbit.lyndon_root = std::move(root);
      orbit.power = k;
      orbit.words.push_back(std::move(rep));
    }
    for (Word cur = act(orbit.words.front(), action); cur != orbit.words.front();
         cur = act(cur, action))
      orbit.words.push_back(cur);
    for (const Word& u : orbit.words) seen.insert(u);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool detshuffle_recursion_check(const DegreeVector& m, const BraidingMatrix& q) {
  if (m.nonzero_letters() < 2)
    throw std::invalid_argument("recursion check needs two nonzero entries");
  const int len = m.total();
  HomogeneousComponent comp(m);
  const ExactScalar lhs = s1_matrix(len - 1, comp, q).det();

  ExactScalar rhs = eval(a_form(m), q);
  for (int letter = 1; letter <= m.n(); ++letter) {
    if (m.count(letter) == 0) continue;
    HomogeneousComponent sub(m.minus_letter(letter));
    rhs = rhs * s1_matrix(len - 2, sub, q).det();
  }
  return lhs == rhs;
}

}  // namespace nichols
