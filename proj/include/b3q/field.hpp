#pragma once

// Exact arithmetic over Q and over a single simple extension Q[t]/(m(t)).
//
// A FieldContext owns the monic, squarefree modulus m(t). FieldElement is a
// value type holding the reduced coefficient vector c0 + c1*θ + ... in
// ascending powers of θ = t mod m. A degree-1 context is the rational field.
// The modulus is not required to be irreducible; hitting a zero divisor while
// inverting raises Errc::NotInvertible.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "b3q/error.hpp"

namespace b3q {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Exact k-th root of a rational, or nullopt when none exists in Q.
/// For even k the non-negative root is returned.
std::optional<Rational> rational_kth_root(const Rational& a, unsigned k);

class FieldContext;
using ContextPtr = std::shared_ptr<const FieldContext>;

class FieldContext {
 public:
  /// `modulus` holds ascending coefficients; the last one must be 1.
  static ContextPtr make(std::vector<Rational> modulus);

  /// Q, realised as Q[t]/(t).
  static ContextPtr rationals();
  /// Q(i) via t^2 + 1.
  static ContextPtr gaussian();
  /// Q(ζ5) via t^4 + t^3 + t^2 + t + 1.
  static ContextPtr cyclotomic5();

  int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<Rational>& modulus() const noexcept { return modulus_; }
  bool is_base_field() const noexcept { return degree() == 1; }
  std::string modulus_string(std::string_view var = "t") const;

  friend bool same_field(const FieldContext& a, const FieldContext& b) noexcept {
    return &a == &b || a.modulus_ == b.modulus_;
  }

 private:
  explicit FieldContext(std::vector<Rational> modulus) : modulus_(std::move(modulus)) {}

  std::vector<Rational> modulus_;
};

class FieldElement {
 public:
  /// Zero of Q. Mostly useful as a placeholder before assignment.
  FieldElement();
  FieldElement(ContextPtr ctx, const Rational& value);
  FieldElement(ContextPtr ctx, long value) : FieldElement(std::move(ctx), Rational(value)) {}
  /// Coefficients in ascending powers of θ; reduced modulo the context modulus.
  FieldElement(ContextPtr ctx, std::vector<Rational> coeffs);

  static FieldElement generator(const ContextPtr& ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when only the constant coefficient may be nonzero.
  bool is_rational() const noexcept;
  /// Throws BadSpec unless is_rational().
  const Rational& rational_value() const;

  FieldElement zero() const { return FieldElement(ctx_, Rational(0)); }
  FieldElement one() const { return FieldElement(ctx_, Rational(1)); }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t n) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  FieldElement& operator*=(const Rational& q);
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }
  friend FieldElement operator+(FieldElement a, const Rational& q) { return a += FieldElement(a.ctx_, q); }
  friend FieldElement operator-(FieldElement a, const Rational& q) { return a -= FieldElement(a.ctx_, q); }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// "p/q" for rational values in a degree-1 context, "[c0, c1, ...]" otherwise.
  std::string to_string() const;
  /// Inverse of to_string(); a bare rational is embedded as a constant.
  static FieldElement parse(const ContextPtr& ctx, std::string_view text);

 private:
  void check_same(const FieldElement& o) const;

  ContextPtr ctx_;
  std::vector<Rational> c_;
};

void require_same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace b3q
