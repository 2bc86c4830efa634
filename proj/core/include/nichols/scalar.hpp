#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nichols/numeric.hpp"
#include "nichols/zpoly.hpp"

namespace nichols {

// An exact characteristic-0 coefficient field: either the cyclotomic field
// Q(zeta_N), with elements represented as residues modulo Phi_N, or the
// rational function field Q(t) with t transcendental.
class FieldContext {
 public:
  enum class Kind { Cyclotomic, Transcendental };

  static std::shared_ptr<const FieldContext> make_cyclotomic(long n);
  static std::shared_ptr<const FieldContext> make_transcendental();

  Kind kind() const { return kind_; }
  bool is_cyclotomic() const { return kind_ == Kind::Cyclotomic; }
  long order_n() const { return n_; }            // N; 0 for transcendental
  const ZPoly& modulus() const { return mod_; }  // Phi_N
  int degree() const { return degree_; }         // deg Phi_N; 1 for transcendental

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_;
  }

 private:
  FieldContext(Kind kind, long n);
  Kind kind_;
  long n_ = 0;
  ZPoly mod_;
  int degree_ = 1;
};

using FieldContextPtr = std::shared_ptr<const FieldContext>;

// A field element.  Immutable value semantics; every element carries its
// context and mixing contexts throws.
class ExactScalar {
 public:
  static ExactScalar zero(const FieldContextPtr& ctx);
  static ExactScalar one(const FieldContextPtr& ctx);
  static ExactScalar from_rational(const FieldContextPtr& ctx, const Rat& r);
  static ExactScalar from_integer(const FieldContextPtr& ctx, long v);

  // zeta_N^e in a cyclotomic context (e may be negative)
  static ExactScalar zeta_power(const FieldContextPtr& ctx, long e);
  // t^e in the transcendental context (e may be negative)
  static ExactScalar t_power(const FieldContextPtr& ctx, long e);
  // residue of an integer polynomial in zeta
  static ExactScalar from_poly_in_zeta(const FieldContextPtr& ctx, const std::vector<Rat>& coeffs);
  static ExactScalar rational_function(const FieldContextPtr& ctx, ZPoly num, ZPoly den);

  const FieldContextPtr& context() const { return ctx_; }

  bool is_zero() const;
  bool is_one() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar&, const ExactScalar&);
  ExactScalar inverse() const;  // throws on zero
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inverse();
  }
  ExactScalar pow(long e) const;  // negative e inverts; requires nonzero then

  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

  // least k >= 1 with x^k = 1, or nullopt when x is not a root of unity;
  // throws on zero.  In Q(zeta_N) the torsion is the lcm(2,N)-th roots of
  // unity, which bounds the search; in Q(t) only +-1 have finite order.
  std::optional<long> multiplicative_order() const;

  // representation accessors for serialization
  const std::vector<Rat>& cyclotomic_coeffs() const;
  const ZPoly& numerator() const;
  const ZPoly& denominator() const;

  std::string to_string() const;

 private:
  struct Cyc {
    std::vector<Rat> c;  // dense, exactly ctx->degree() entries
    friend bool operator==(const Cyc&, const Cyc&) = default;
  };
  struct RatFn {
    ZPoly num, den;  // reduced; den primitive with positive leading coefficient
    friend bool operator==(const RatFn&, const RatFn&) = default;
  };

  ExactScalar(FieldContextPtr ctx, Cyc rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}
  ExactScalar(FieldContextPtr ctx, RatFn rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}

  void check_same_context(const ExactScalar& o) const;
  const Cyc& cyc() const { return std::get<Cyc>(rep_); }
  const RatFn& ratfn() const { return std::get<RatFn>(rep_); }

  FieldContextPtr ctx_;
  std::variant<Cyc, RatFn> rep_;
};

inline ExactScalar ring_one(const ExactScalar& x) { return ExactScalar::one(x.context()); }

}  // namespace nichols
