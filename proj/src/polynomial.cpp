#include "b3q/polynomial.hpp"

#include <sstream>

namespace b3q {

Polynomial::Polynomial(ContextPtr ctx, std::vector<FieldElement> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (const auto& c : c_) require_same_context(ctx_, c.context());
  trim();
}

Polynomial::Polynomial(ContextPtr ctx, const std::vector<Rational>& coeffs) : ctx_(std::move(ctx)) {
  c_.reserve(coeffs.size());
  for (const auto& q : coeffs) c_.emplace_back(ctx_, q);
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.context(), std::vector<FieldElement>{c}); }

Polynomial Polynomial::monomial(const ContextPtr& ctx, int k) {
  std::vector<FieldElement> c(static_cast<std::size_t>(k) + 1, FieldElement(ctx, 0L));
  c.back() = FieldElement(ctx, 1L);
  return Polynomial(ctx, std::move(c));
}

Polynomial Polynomial::linear(const FieldElement& root) {
  return Polynomial(root.context(), std::vector<FieldElement>{-root, root.one()});
}

Polynomial Polynomial::from_roots(const ContextPtr& ctx, const std::vector<FieldElement>& roots) {
  Polynomial p = constant(FieldElement(ctx, 1L));
  for (const auto& r : roots) p = p * linear(r);
  return p;
}

FieldElement Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return FieldElement(ctx_, 0L);
  return c_[static_cast<std::size_t>(k)];
}

const FieldElement& Polynomial::leading() const {
  if (c_.empty()) throw Error(Errc::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return c_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  FieldElement inv = leading().inverse();
  Polynomial r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return Polynomial(ctx_, std::move(d));
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  FieldElement acc(ctx_, 0L);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_context(ctx_, o.ctx_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement(ctx_, 0L));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_context(ctx_, o.ctx_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement(ctx_, 0L));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.ctx_, b.ctx_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, FieldElement(a.ctx_, 0L));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(a.ctx_, std::move(r));
}

Polynomial operator*(Polynomial a, const FieldElement& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(FieldElement(ctx_, 1L));
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.ctx_, b.ctx_);
  return a.c_ == b.c_;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[k].is_one();
    if (!unit || k == 0) os << "(" << c_[k].to_string() << ")";
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

PolyDivision divmod(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.context(), b.context());
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  const auto& ctx = a.context();
  std::vector<FieldElement> r = a.coeffs();
  if (a.degree() < b.degree()) return {Polynomial(ctx), a};
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, FieldElement(ctx, 0L));
  FieldElement lead_inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (std::size_t top = r.size(); top-- >= bc.size();) {
    if (r[top].is_zero()) continue;
    std::size_t shift = top + 1 - bc.size();
    FieldElement f = r[top] * lead_inv;
    q[shift] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= f * bc[j];
    if (top == 0) break;
  }
  r.resize(bc.size() - 1, FieldElement(ctx, 0L));
  return {Polynomial(ctx, std::move(q)), Polynomial(ctx, std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroPolynomial, "lcm of the zero polynomial");
  return divmod(a * b, gcd(a, b)).quotient.monic();
}

FieldElement poly_resultant(const Polynomial& p, const Polynomial& q) {
  require_same_context(p.context(), q.context());
  if (p.is_zero() || q.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant with the zero polynomial");
  const auto& ctx = p.context();
  // Res(a, b) with deg a = m, deg b = n:
  //   Res(a, b) = (-1)^{mn} Res(b, a)
  //   Res(a, b) = lc(a)^{n - deg r} Res(a, r)  for b = s*a + r
  FieldElement acc(ctx, 1L);
  Polynomial a = p, b = q;
  for (;;) {
    int m = a.degree(), n = b.degree();
    if (m == 0) return acc * a.leading().pow(n);
    if (n == 0) return acc * b.leading().pow(m);
    if (n < m) {
      if ((m * n) % 2) acc = -acc;
      std::swap(a, b);
      continue;
    }
    Polynomial r = divmod(b, a).remainder;
    if (r.is_zero()) return FieldElement(ctx, 0L);
    acc *= a.leading().pow(n - r.degree());
    b = std::move(r);
  }
}

}  // namespace b3q
