#include "nichols/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace nichols {

LaurentMonomial LaurentMonomial::variable(int i, int j, long e) {
  LaurentMonomial m;
  if (e != 0) m.exp_[{i, j}] = e;
  return m;
}

long LaurentMonomial::exponent(int i, int j) const {
  auto it = exp_.find({i, j});
  return it == exp_.end() ? 0 : it->second;
}

bool LaurentMonomial::has_negative_exponent() const {
  return std::any_of(exp_.begin(), exp_.end(), [](const auto& kv) { return kv.second < 0; });
}

LaurentMonomial& LaurentMonomial::operator*=(const LaurentMonomial& o) {
  for (const auto& [var, e] : o.exp_) {
    long& mine = exp_[var];
    mine += e;
    if (mine == 0) exp_.erase(var);
  }
  return *this;
}

LaurentMonomial LaurentMonomial::inverse() const {
  LaurentMonomial m;
  for (const auto& [var, e] : exp_) m.exp_[var] = -e;
  return m;
}

LaurentMonomial LaurentMonomial::pow(long k) const {
  LaurentMonomial m;
  if (k == 0) return m;
  for (const auto& [var, e] : exp_) m.exp_[var] = e * k;
  return m;
}

// lex order on exponent vectors over the (i,j)-sorted variables, absent
// entries read as 0; compatible with multiplication, unlike a plain
// comparison of the sparse maps
bool operator<(const LaurentMonomial& a, const LaurentMonomial& b) {
  auto ia = a.exp_.begin(), ib = b.exp_.begin();
  while (ia != a.exp_.end() || ib != b.exp_.end()) {
    if (ib == b.exp_.end()) return ia->second < 0;
    if (ia == a.exp_.end()) return ib->second > 0;
    if (ia->first != ib->first) {
      if (ia->first < ib->first) return ia->second < 0;
      return ib->second > 0;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

std::string LaurentMonomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  for (const auto& [var, e] : exp_) {
    if (!s.empty()) s += "*";
    s += "p[" + std::to_string(var.first) + "][" + std::to_string(var.second) + "]";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPolynomial LaurentPolynomial::constant(Int c) {
  return term(std::move(c), LaurentMonomial());
}

LaurentPolynomial LaurentPolynomial::term(Int c, const LaurentMonomial& m) {
  LaurentPolynomial p;
  if (c != 0) p.terms_[m] = std::move(c);
  return p;
}

bool LaurentPolynomial::has_negative_exponent() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.has_negative_exponent(); });
}

Int LaurentPolynomial::coeff(const LaurentMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    Int& mine = terms_[m];
    mine += c;
    if (mine == 0) terms_.erase(m);
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    Int& mine = terms_[m];
    mine -= c;
    if (mine == 0) terms_.erase(m);
  }
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      LaurentMonomial m = ma * mb;
      Int& c = out.terms_[m];
      c += ca * cb;
      if (c == 0) out.terms_.erase(m);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(long k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  LaurentPolynomial acc = one();
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    Int a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += m.to_string();
    }
  }
  return s;
}

namespace {

nlohmann::json coeff_to_json(const Int& c) {
  if (c.fits_slong_p()) return static_cast<long>(c.get_si());
  return c.get_str();
}

Int coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or decimal string");
}

}  // namespace

std::string LaurentPolynomial::to_json_string() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& [var, e] : m.exponents()) exps.push_back({var.first, var.second, e});
    arr.push_back({{"coeff", coeff_to_json(c)}, {"exps", exps}});
  }
  return arr.dump();
}

LaurentPolynomial LaurentPolynomial::from_json_string(const std::string& json) {
  nlohmann::json arr = nlohmann::json::parse(json);
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  LaurentPolynomial p;
  for (const auto& t : arr) {
    LaurentMonomial m;
    for (const auto& v : t.at("exps"))
      m *= LaurentMonomial::variable(v.at(0).get<int>(), v.at(1).get<int>(), v.at(2).get<long>());
    p += term(coeff_from_json(t.at("coeff")), m);
  }
  return p;
}

std::optional<std::pair<int, LaurentMonomial>> associate_factor(const LaurentPolynomial& f,
                                                                const LaurentPolynomial& g) {
  if (f.is_zero() || g.is_zero()) {
    if (f.is_zero() && g.is_zero()) return std::make_pair(1, LaurentMonomial());
    return std::nullopt;
  }
  if (f.term_count() != g.term_count()) return std::nullopt;
  const auto& [fm, fc] = *f.terms().begin();
  const auto& [gm, gc] = *g.terms().begin();
  if (fc != gc && fc != -gc) return std::nullopt;
  const int sign = fc == gc ? 1 : -1;
  LaurentMonomial unit = fm / gm;
  LaurentPolynomial candidate;
  for (const auto& [m, c] : g.terms())
    candidate += LaurentPolynomial::term(sign * c, m * unit);
  if (candidate == f) return std::make_pair(sign, unit);
  return std::nullopt;
}

LaurentPolynomial compose(const ZPoly& f, const LaurentMonomial& q) {
  LaurentPolynomial out;
  for (int k = 0; k <= f.degree(); ++k) {
    if (f.coeff(k) == 0) continue;
    out += LaurentPolynomial::term(f.coeff(k), q.pow(k));
  }
  return out;
}

}  // namespace nichols
