#include "nichols/pm.hpp"

#include <algorithm>
#include <stdexcept>

namespace nichols {

const char* pm_case_name(PmCaseTag tag) {
  switch (tag) {
    case PmCaseTag::SingleLetter: return "single-letter";
    case PmCaseTag::OnePlusK: return "one-plus-k";
    case PmCaseTag::TwoPlusK: return "two-plus-k";
    case PmCaseTag::ThreeThree: return "(3,3)";
    case PmCaseTag::ThreeFour: return "(3,4)";
    case PmCaseTag::ThreeSix: return "(3,6)";
    case PmCaseTag::FourFour: return "(4,4)";
    case PmCaseTag::Generic: return "generic";
  }
  return "?";
}

PmCase classify(const DegreeVector& m) {
  if (m.total() < 2) throw std::invalid_argument("classify needs |m| >= 2");
  int first = 0, second = 0;  // letters of the nonzero entries, if exactly two
  for (int letter = 1; letter <= m.n(); ++letter) {
    if (m.count(letter) == 0) continue;
    if (first == 0)
      first = letter;
    else if (second == 0)
      second = letter;
    else
      return {PmCaseTag::Generic};
  }
  if (second == 0) return {PmCaseTag::SingleLetter, first};

  const int a = m.count(first), b = m.count(second);
  auto oriented = [&](int low) {
    // i carries the low entry, j the other
    return a == low ? PmCase{PmCaseTag::Generic, first, second}
                    : PmCase{PmCaseTag::Generic, second, first};
  };
  if (a == 1 || b == 1) {
    PmCase c = oriented(1);
    c.tag = PmCaseTag::OnePlusK;
    return c;
  }
  if (a == 2 || b == 2) {
    PmCase c = oriented(2);
    c.tag = PmCaseTag::TwoPlusK;
    return c;
  }
  if (a == 3 && b == 3) return {PmCaseTag::ThreeThree, first, second};
  if ((a == 3 && b == 4) || (a == 4 && b == 3)) {
    PmCase c = oriented(3);
    c.tag = PmCaseTag::ThreeFour;
    return c;
  }
  if ((a == 3 && b == 6) || (a == 6 && b == 3)) {
    PmCase c = oriented(3);
    c.tag = PmCaseTag::ThreeSix;
    return c;
  }
  if (a == 4 && b == 4) return {PmCaseTag::FourFour, first, second};
  return {PmCaseTag::Generic};
}

LaurentMonomial q_monomial(const DegreeVector& m) {
  if (m.total() < 2) throw std::invalid_argument("Q_m needs |m| >= 2");
  const long N = m.big_n();
  LaurentMonomial q;
  for (int i = 1; i <= m.n(); ++i) {
    const long mi = m.count(i);
    if (mi * (mi - 1) % N != 0) throw std::logic_error("N(m) does not divide m_i(m_i-1)");
    q *= LaurentMonomial::variable(i, i, mi * (mi - 1) / N);
    for (int j = i + 1; j <= m.n(); ++j) {
      const long mj = m.count(j);
      if (mi * mj % N != 0) throw std::logic_error("N(m) does not divide m_i m_j");
      q *= LaurentMonomial::variable(i, j, mi * mj / N);
      q *= LaurentMonomial::variable(j, i, mi * mj / N);
    }
  }
  return q;
}

namespace {

LaurentPolynomial one_minus(const LaurentPolynomial& p) { return LaurentPolynomial::one() - p; }

LaurentPolynomial mono(const LaurentMonomial& m) { return LaurentPolynomial::term(1, m); }

}  // namespace

LaurentPolynomial p_poly(const DegreeVector& m) {
  const PmCase c = classify(m);
  auto var = LaurentMonomial::variable;
  switch (c.tag) {
    case PmCaseTag::SingleLetter:
      return q_integer(m.count(c.i), mono(var(c.i, c.i, 1)));
    case PmCaseTag::OnePlusK: {
      const long mj = m.count(c.j);
      return one_minus(mono(var(c.j, c.j, mj - 1) * var(c.i, c.j, 1) * var(c.j, c.i, 1)));
    }
    case PmCaseTag::TwoPlusK: {
      const long mj = m.count(c.j);
      const int sign = mj % 2 == 0 ? 1 : -1;
      LaurentMonomial mon =
          var(c.j, c.j, mj * (mj - 1) / 2) * (var(c.i, c.j, 1) * var(c.j, c.i, 1)).pow(mj) *
          var(c.i, c.i, 1);
      return LaurentPolynomial::one() + LaurentPolynomial::term(sign, mon);
    }
    case PmCaseTag::ThreeThree:
      return q_integer(
          3L, mono(var(c.i, c.i, 2) * (var(c.i, c.j, 1) * var(c.j, c.i, 1)).pow(3) * var(c.j, c.j, 2)));
    case PmCaseTag::ThreeFour: {
      // first factor reads (p_ij p_ji)^4, consistent with Q_m^2
      LaurentMonomial m1 =
          var(c.i, c.i, 2) * (var(c.i, c.j, 1) * var(c.j, c.i, 1)).pow(4) * var(c.j, c.j, 4);
      LaurentMonomial m2 =
          var(c.i, c.i, 1) * (var(c.i, c.j, 1) * var(c.j, c.i, 1)).pow(2) * var(c.j, c.j, 2);
      return one_minus(mono(m1)) * q_integer(3L, mono(m2));
    }
    case PmCaseTag::ThreeSix: {
      LaurentMonomial m1 =
          var(c.i, c.i, 1) * (var(c.i, c.j, 1) * var(c.j, c.i, 1)).pow(3) * var(c.j, c.j, 5);
      LaurentMonomial m2 =
          var(c.i, c.i, 2) * (var(c.i, c.j, 1) * var(c.j, c.i, 1)).pow(6) * var(c.j, c.j, 10);
      return one_minus(mono(m1)) * q_integer(3L, mono(m2));
    }
    case PmCaseTag::FourFour: {
      LaurentMonomial m1 =
          var(c.i, c.i, 3) * (var(c.i, c.j, 1) * var(c.j, c.i, 1)).pow(4) * var(c.j, c.j, 3);
      LaurentMonomial m2 =
          var(c.i, c.i, 6) * (var(c.i, c.j, 1) * var(c.j, c.i, 1)).pow(8) * var(c.j, c.j, 6);
      return (LaurentPolynomial::one() + mono(m1)) * (LaurentPolynomial::one() + mono(m2));
    }
    case PmCaseTag::Generic: {
      LaurentMonomial full;
      for (int i = 1; i <= m.n(); ++i) {
        const long mi = m.count(i);
        full *= var(i, i, mi * (mi - 1));
        for (int j = i + 1; j <= m.n(); ++j)
          full *= (var(i, j, 1) * var(j, i, 1)).pow(mi * m.count(j));
      }
      return one_minus(mono(full));
    }
  }
  throw std::logic_error("unreachable");
}

bool CyclotomicProductForm::nonnegative() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(),
                     [](const auto& kv) { return kv.second >= 0; });
}

std::set<long> CyclotomicProductForm::support() const {
  std::set<long> s;
  for (const auto& [d, mult] : multiplicities)
    if (mult > 0) s.insert(d);
  return s;
}

void CyclotomicProductForm::mul_one_minus_power(long j, long times) {
  if (times == 0) return;
  // 1 - Q^j = - prod_{d | j} Phi_d(Q)
  if (times % 2 != 0) sign = -sign;
  for (long d : divisors(j)) {
    long& mult = multiplicities[d];
    mult += times;
    if (mult == 0) multiplicities.erase(d);
  }
}

LaurentPolynomial CyclotomicProductForm::expand() const {
  if (!nonnegative()) throw std::invalid_argument("cannot expand a form with negative multiplicities");
  LaurentPolynomial out = LaurentPolynomial::term(sign, unit);
  for (const auto& [d, mult] : multiplicities)
    out = out * compose(cyclotomic(d), base).pow(mult);
  return out;
}

std::string CyclotomicProductForm::to_string() const {
  std::string s = sign < 0 ? "-" : "";
  if (!unit.is_one()) s += unit.to_string() + " * ";
  if (multiplicities.empty()) return s.empty() ? "1" : s + "1";
  bool first = true;
  for (const auto& [d, mult] : multiplicities) {
    if (!first) s += " * ";
    first = false;
    s += "Phi_" + std::to_string(d) + "(Q)";
    if (mult != 1) s += "^" + std::to_string(mult);
  }
  return s;
}

CyclotomicProductForm p_factor_form(const DegreeVector& m) {
  const PmCase c = classify(m);
  CyclotomicProductForm f;
  f.base = q_monomial(m);
  switch (c.tag) {
    case PmCaseTag::SingleLetter:
      for (long d : divisors(m.count(c.i)))
        if (d > 1) f.multiplicities[d] = 1;
      break;
    case PmCaseTag::OnePlusK:
      f.sign = -1;
      f.multiplicities[1] = 1;
      break;
    case PmCaseTag::TwoPlusK:
      if (m.count(c.j) % 2 == 0) {
        f.multiplicities[2] = 1;
      } else {
        f.sign = -1;
        f.multiplicities[1] = 1;
      }
      break;
    case PmCaseTag::ThreeThree:
      f.multiplicities[3] = 1;
      break;
    case PmCaseTag::ThreeFour:
      // (1 - Q^2)(3)_Q = -Phi_1 Phi_2 Phi_3
      f.sign = -1;
      f.multiplicities = {{1, 1}, {2, 1}, {3, 1}};
      break;
    case PmCaseTag::ThreeSix:
      // (1 - Q)(3)_{Q^2} = -Phi_1 Phi_3 Phi_6
      f.sign = -1;
      f.multiplicities = {{1, 1}, {3, 1}, {6, 1}};
      break;
    case PmCaseTag::FourFour:
      // (1 + Q)(1 + Q^2) = Phi_2 Phi_4
      f.multiplicities = {{2, 1}, {4, 1}};
      break;
    case PmCaseTag::Generic:
      f.sign = -1;
      for (long d : divisors(m.big_n())) f.multiplicities[d] = 1;
      break;
  }
  return f;
}

CyclotomicProductForm a_form(const DegreeVector& m) {
  if (m.total() < 2) throw std::invalid_argument("A_m needs |m| >= 2");
  const long N = m.big_n();
  CyclotomicProductForm f;
  f.base = q_monomial(m);
  for (int letter = 1; letter <= m.n(); ++letter) {
    if (m.count(letter) == 0) continue;
    const DegreeVector mi = m.minus_letter(letter);
    for (long k : divisors(mi.gcd())) {
      if (N % k != 0) throw std::logic_error("k | gcd(m - e_i) must divide N(m)");
      f.mul_one_minus_power(N / k, lyndon_count(mi.divided_by(k)));
    }
  }
  for (long k : divisors(m.gcd())) {
    if (N % k != 0) throw std::logic_error("k | gcd(m) must divide N(m)");
    f.mul_one_minus_power(N / k, -lyndon_count(m.divided_by(k)));
  }
  return f;
}

bool radical_identity_check(const DegreeVector& m) {
  if (m.nonzero_letters() < 2)
    throw std::invalid_argument("radical identity needs two nonzero entries");
  const CyclotomicProductForm a = a_form(m);
  const CyclotomicProductForm p = p_factor_form(m);
  if (a.support() != p.support()) return false;
  CyclotomicProductForm radical;
  radical.base = a.base;
  for (long d : a.support()) radical.multiplicities[d] = 1;
  return associate_factor(radical.expand(), p_poly(m)).has_value();
}

bool coprime_check(const DegreeVector& m, const DegreeVector& l) {
  if (m.total() < 2 || l.total() < 2) throw std::invalid_argument("coprime_check needs |m|, |l| >= 2");
  if (m.nonzero_letters() < 2)
    throw std::invalid_argument("coprime_check needs m with two nonzero entries");
  if (m.n() != l.n()) throw std::invalid_argument("mismatched alphabet sizes");
  if (q_monomial(m) != q_monomial(l)) return true;
  const std::set<long> sm = p_factor_form(m).support();
  const std::set<long> sl = p_factor_form(l).support();
  return std::none_of(sm.begin(), sm.end(), [&](long d) { return sl.count(d) > 0; });
}

}  // namespace nichols
