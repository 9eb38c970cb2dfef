#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "b3q/field.hpp"

namespace b3q {

/// Dense univariate polynomial over a FieldContext, ascending coefficients,
/// trailing zeros trimmed. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Polynomial(ContextPtr ctx, std::vector<FieldElement> coeffs);
  Polynomial(ContextPtr ctx, const std::vector<Rational>& coeffs);

  static Polynomial constant(const FieldElement& c);
  /// λ^k
  static Polynomial monomial(const ContextPtr& ctx, int k);
  /// λ - r
  static Polynomial linear(const FieldElement& root);
  /// ∏ (λ - r_i)
  static Polynomial from_roots(const ContextPtr& ctx, const std::vector<FieldElement>& roots);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  FieldElement coeff(int k) const;
  const FieldElement& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  FieldElement operator()(const FieldElement& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& s);
  Polynomial operator-() const;
  Polynomial pow(unsigned n) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();

  ContextPtr ctx_;
  std::vector<FieldElement> c_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws ZeroPolynomial for a zero divisor.
PolyDivision divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Monic lcm of nonzero polynomials.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// Res(p, q) = lc(p)^deg q * ∏_{p(α)=0} q(α), computed through the Euclidean
/// remainder sequence. Vanishes iff p and q share a root over the algebraic closure.
FieldElement poly_resultant(const Polynomial& p, const Polynomial& q);

}  // namespace b3q
