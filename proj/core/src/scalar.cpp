#include "nichols/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace nichols {

namespace {

// --- dense rational polynomial helpers for arithmetic modulo Phi_N ---

using QVec = std::vector<Rat>;

void qv_trim(QVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QVec qv_mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  qv_trim(out);
  return out;
}

// remainder modulo a monic integer polynomial
QVec qv_mod(QVec a, const ZPoly& mod) {
  const int dm = mod.degree();
  qv_trim(a);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const Rat top = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    if (top != 0)
      for (int j = 0; j <= dm; ++j) a[shift + j] -= top * Rat(mod.coeffs()[j]);
    a.pop_back();
    qv_trim(a);
  }
  return a;
}

// polynomial division with remainder over Q; divisor nonzero
std::pair<QVec, QVec> qv_divmod(QVec a, const QVec& b) {
  QVec quot;
  qv_trim(a);
  if (b.empty()) throw std::invalid_argument("division by zero polynomial");
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 >= db) quot.assign(a.size() - db, Rat(0));
  while (static_cast<int>(a.size()) - 1 >= db) {
    const Rat q = a.back() / b.back();
    const int shift = static_cast<int>(a.size()) - 1 - db;
    quot[shift] = q;
    for (int j = 0; j <= db; ++j) a[shift + j] -= q * b[j];
    a.pop_back();
    qv_trim(a);
  }
  return {std::move(quot), std::move(a)};
}

QVec qv_sub(QVec a, const QVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qv_trim(a);
  return a;
}

// inverse of a modulo the monic modulus, via the extended Euclidean algorithm
QVec qv_inverse_mod(QVec a, const ZPoly& mod) {
  QVec r0;
  for (const Int& c : mod.coeffs()) r0.emplace_back(c);
  QVec r1 = std::move(a);
  qv_trim(r1);
  if (r1.empty()) throw std::invalid_argument("division by zero");
  QVec s0 = {}, s1 = {Rat(1)};  // s tracks the coefficient of a
  while (!r1.empty()) {
    auto [q, r2] = qv_divmod(r0, r1);
    QVec s2 = qv_sub(s0, qv_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd, a unit in Q[x] since Phi_N is irreducible
  if (static_cast<int>(r0.size()) != 1)
    throw std::logic_error("element not invertible modulo Phi_N");
  const Rat lead = r0[0];
  for (Rat& c : s0) c /= lead;
  return qv_mod(std::move(s0), mod);
}

}  // namespace

FieldContext::FieldContext(Kind kind, long n) : kind_(kind), n_(n) {
  if (kind_ == Kind::Cyclotomic) {
    mod_ = cyclotomic(n_);
    degree_ = mod_.degree();
  }
}

std::shared_ptr<const FieldContext> FieldContext::make_cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  return std::shared_ptr<const FieldContext>(new FieldContext(Kind::Cyclotomic, n));
}

std::shared_ptr<const FieldContext> FieldContext::make_transcendental() {
  return std::shared_ptr<const FieldContext>(new FieldContext(Kind::Transcendental, 0));
}

void ExactScalar::check_same_context(const ExactScalar& o) const {
  if (!(*ctx_ == *o.ctx_)) throw std::invalid_argument("mixed field contexts");
}

ExactScalar ExactScalar::zero(const FieldContextPtr& ctx) { return from_rational(ctx, Rat(0)); }

ExactScalar ExactScalar::one(const FieldContextPtr& ctx) { return from_rational(ctx, Rat(1)); }

ExactScalar ExactScalar::from_integer(const FieldContextPtr& ctx, long v) {
  return from_rational(ctx, Rat(v));
}

ExactScalar ExactScalar::from_rational(const FieldContextPtr& ctx, const Rat& r) {
  if (ctx->is_cyclotomic()) {
    Cyc rep;
    rep.c.assign(ctx->degree(), Rat(0));
    rep.c[0] = r;
    return ExactScalar(ctx, std::move(rep));
  }
  RatFn rep;
  rep.num = ZPoly::constant(Int(r.get_num()));
  rep.den = ZPoly::constant(Int(r.get_den()));
  ExactScalar x(ctx, std::move(rep));
  return x;
}

ExactScalar ExactScalar::zeta_power(const FieldContextPtr& ctx, long e) {
  if (!ctx->is_cyclotomic()) throw std::invalid_argument("zeta_power needs a cyclotomic context");
  const long n = ctx->order_n();
  long r = e % n;
  if (r < 0) r += n;
  QVec v(r + 1, Rat(0));
  v[r] = 1;
  v = qv_mod(std::move(v), ctx->modulus());
  Cyc rep;
  rep.c.assign(ctx->degree(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) rep.c[i] = v[i];
  return ExactScalar(ctx, std::move(rep));
}

ExactScalar ExactScalar::t_power(const FieldContextPtr& ctx, long e) {
  if (ctx->is_cyclotomic()) throw std::invalid_argument("t_power needs the transcendental context");
  RatFn rep;
  if (e >= 0) {
    rep.num = ZPoly::monomial(1, static_cast<int>(e));
    rep.den = ZPoly::constant(1);
  } else {
    rep.num = ZPoly::constant(1);
    rep.den = ZPoly::monomial(1, static_cast<int>(-e));
  }
  return ExactScalar(ctx, std::move(rep));
}

ExactScalar ExactScalar::from_poly_in_zeta(const FieldContextPtr& ctx,
                                           const std::vector<Rat>& coeffs) {
  if (!ctx->is_cyclotomic())
    throw std::invalid_argument("from_poly_in_zeta needs a cyclotomic context");
  QVec v = coeffs;
  v = qv_mod(std::move(v), ctx->modulus());
  Cyc rep;
  rep.c.assign(ctx->degree(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) rep.c[i] = v[i];
  return ExactScalar(ctx, std::move(rep));
}

namespace {

void ratfn_normalize(ZPoly& num, ZPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  if (num.is_zero()) {
    den = ZPoly::constant(1);
    return;
  }
  ZPoly g = zpoly_gcd(num, den);
  num = num.divide_exact(g);
  den = den.divide_exact(g);
  if (den.lead() < 0) {
    num = -num;
    den = -den;
  }
}

}  // namespace

ExactScalar ExactScalar::rational_function(const FieldContextPtr& ctx, ZPoly num, ZPoly den) {
  if (ctx->is_cyclotomic())
    throw std::invalid_argument("rational_function needs the transcendental context");
  ratfn_normalize(num, den);
  RatFn rep{std::move(num), std::move(den)};
  return ExactScalar(ctx, std::move(rep));
}

bool ExactScalar::is_zero() const {
  if (ctx_->is_cyclotomic())
    return std::all_of(cyc().c.begin(), cyc().c.end(), [](const Rat& c) { return c == 0; });
  return ratfn().num.is_zero();
}

bool ExactScalar::is_one() const {
  if (ctx_->is_cyclotomic()) {
    const auto& c = cyc().c;
    if (c[0] != 1) return false;
    return std::all_of(c.begin() + 1, c.end(), [](const Rat& x) { return x == 0; });
  }
  return ratfn().num == ratfn().den;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar x = *this;
  if (ctx_->is_cyclotomic()) {
    for (Rat& c : std::get<Cyc>(x.rep_).c) c = -c;
  } else {
    std::get<RatFn>(x.rep_).num = -std::get<RatFn>(x.rep_).num;
  }
  return x;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  check_same_context(o);
  if (ctx_->is_cyclotomic()) {
    auto& mine = std::get<Cyc>(rep_).c;
    const auto& other = o.cyc().c;
    for (std::size_t i = 0; i < mine.size(); ++i) mine[i] += other[i];
    return *this;
  }
  auto& mine = std::get<RatFn>(rep_);
  const auto& other = o.ratfn();
  ZPoly num = mine.num * other.den + other.num * mine.den;
  ZPoly den = mine.den * other.den;
  ratfn_normalize(num, den);
  mine.num = std::move(num);
  mine.den = std::move(den);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  a.check_same_context(b);
  if (a.ctx_->is_cyclotomic()) {
    QVec prod = qv_mul(a.cyc().c, b.cyc().c);
    prod = qv_mod(std::move(prod), a.ctx_->modulus());
    ExactScalar::Cyc rep;
    rep.c.assign(a.ctx_->degree(), Rat(0));
    for (std::size_t i = 0; i < prod.size(); ++i) rep.c[i] = prod[i];
    return ExactScalar(a.ctx_, std::move(rep));
  }
  ZPoly num = a.ratfn().num * b.ratfn().num;
  ZPoly den = a.ratfn().den * b.ratfn().den;
  ratfn_normalize(num, den);
  return ExactScalar(a.ctx_, ExactScalar::RatFn{std::move(num), std::move(den)});
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("division by zero");
  if (ctx_->is_cyclotomic()) {
    QVec inv = qv_inverse_mod(cyc().c, ctx_->modulus());
    Cyc rep;
    rep.c.assign(ctx_->degree(), Rat(0));
    for (std::size_t i = 0; i < inv.size(); ++i) rep.c[i] = inv[i];
    return ExactScalar(ctx_, std::move(rep));
  }
  ZPoly num = ratfn().den, den = ratfn().num;
  ratfn_normalize(num, den);
  return ExactScalar(ctx_, RatFn{std::move(num), std::move(den)});
}

ExactScalar ExactScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ExactScalar acc = one(ctx_);
  ExactScalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  a.check_same_context(b);
  return a.rep_ == b.rep_;
}

std::optional<long> ExactScalar::multiplicative_order() const {
  if (is_zero()) throw std::invalid_argument("order of zero");
  if (ctx_->is_cyclotomic()) {
    const long bound = lcm_long(2, ctx_->order_n());
    if (!pow(bound).is_one()) return std::nullopt;
    for (long d : divisors(bound))
      if (pow(d).is_one()) return d;
    return std::nullopt;  // unreachable
  }
  if (is_one()) return 1;
  ExactScalar minus_one = -one(ctx_);
  if (*this == minus_one) return 2;
  return std::nullopt;
}

const std::vector<Rat>& ExactScalar::cyclotomic_coeffs() const {
  if (!ctx_->is_cyclotomic()) throw std::invalid_argument("not a cyclotomic element");
  return cyc().c;
}

const ZPoly& ExactScalar::numerator() const {
  if (ctx_->is_cyclotomic()) throw std::invalid_argument("not a rational function");
  return ratfn().num;
}

const ZPoly& ExactScalar::denominator() const {
  if (ctx_->is_cyclotomic()) throw std::invalid_argument("not a rational function");
  return ratfn().den;
}

std::string ExactScalar::to_string() const {
  if (ctx_->is_cyclotomic()) {
    const auto& c = cyc().c;
    std::string s;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
      if (c[k] == 0) continue;
      Rat a = abs(c[k]);
      if (s.empty()) {
        if (c[k] < 0) s += "-";
      } else {
        s += c[k] < 0 ? " - " : " + ";
      }
      if (a != 1 || k == 0) s += a.get_str();
      if (k > 0) {
        if (a != 1) s += "*";
        s += "z";
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s.empty() ? "0" : s;
  }
  const auto& f = ratfn();
  if (f.den == ZPoly::constant(1)) return f.num.to_string("t");
  return "(" + f.num.to_string("t") + ")/(" + f.den.to_string("t") + ")";
}

}  // namespace nichols
