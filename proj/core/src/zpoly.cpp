#include "nichols/zpoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace nichols {

namespace {
const Int kZero = 0;
}

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(Int c) { return ZPoly(std::vector<Int>{std::move(c)}); }

ZPoly ZPoly::monomial(Int c, int degree) {
  std::vector<Int> v(degree + 1, Int(0));
  v[degree] = std::move(c);
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& ZPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const Int& ZPoly::lead() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return c_.back();
}

ZPoly ZPoly::operator-() const {
  std::vector<Int> v = c_;
  for (Int& x : v) x = -x;
  return ZPoly(std::move(v));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return ZPoly(std::move(v));
}

ZPoly ZPoly::divide_exact(const ZPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return ZPoly();
  std::vector<Int> rem = c_;
  const int dd = divisor.degree();
  const int dq = degree() - dd;
  if (dq < 0) throw std::invalid_argument("inexact polynomial division");
  std::vector<Int> quot(dq + 1, Int(0));
  for (int k = dq; k >= 0; --k) {
    Int top = rem[k + dd];
    if (top == 0) continue;
    if (top % divisor.lead() != 0) throw std::invalid_argument("inexact polynomial division");
    Int q = top / divisor.lead();
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs()[j];
    quot[k] = std::move(q);
  }
  for (const Int& r : rem)
    if (r != 0) throw std::invalid_argument("inexact polynomial division");
  return ZPoly(std::move(quot));
}

Int ZPoly::content() const {
  Int g = 0;
  for (const Int& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return ZPoly();
  Int g = content();
  if (lead() < 0) g = -g;
  std::vector<Int> v = c_;
  for (Int& x : v) x /= g;
  return ZPoly(std::move(v));
}

std::string ZPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = c_[k];
    if (c == 0) continue;
    if (!s.empty())
      s += c > 0 ? " + " : " - ";
    else if (c < 0)
      s += "-";
    Int a = abs(c);
    if (a != 1 || k == 0) s += a.get_str();
    if (k > 0) {
      if (a != 1) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

namespace {

ZPoly scale(const ZPoly& p, const Int& c) {
  std::vector<Int> v = p.coeffs();
  for (Int& x : v) x *= c;
  return ZPoly(std::move(v));
}

ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    Int alead = a.lead();
    const int shift = a.degree() - db;
    a = scale(a, b.lead()) - ZPoly::monomial(std::move(alead), shift) * b;
  }
  return a;
}

}  // namespace

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
  if (a.is_zero()) return b.is_zero() ? ZPoly() : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  Int ca = a.content(), cb = b.content();
  Int cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly r = pseudo_rem(a, b);
    if (!r.is_zero()) r = r.primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return ZPoly::constant(std::move(cg)) * a;
}

namespace {

std::map<long, ZPoly>& cyclotomic_cache() {
  static std::map<long, ZPoly> cache;
  return cache;
}

const ZPoly& cyclotomic_locked(long k) {
  auto& cache = cyclotomic_cache();
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<Int> xk(k + 1, Int(0));
  xk[0] = -1;
  xk[k] = 1;
  ZPoly phi(std::move(xk));
  for (long d : divisors(k))
    if (d != k) phi = phi.divide_exact(cyclotomic_locked(d));
  return cache.emplace(k, std::move(phi)).first->second;
}

}  // namespace

const ZPoly& cyclotomic(long k) {
  if (k < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(k);
}

}  // namespace nichols
