#include "b3q/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace b3q {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonMonic: return "NonMonic";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::MissingRoot: return "MissingRoot";
    case Errc::BadSpec: return "BadSpec";
    case Errc::NotScalar: return "NotScalar";
    case Errc::BadLevel: return "BadLevel";
    case Errc::InvalidWitness: return "InvalidWitness";
    case Errc::RootsUnavailable: return "RootsUnavailable";
    case Errc::NotSemisimple: return "NotSemisimple";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::BadEncoding: return "BadEncoding";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Rationals

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(Errc::BadEncoding, "empty rational");
  auto valid_int = [](std::string_view part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw Error(Errc::BadEncoding, "malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::optional<Rational> rational_kth_root(const Rational& a, unsigned k) {
  if (k == 0) throw Error(Errc::BadSpec, "root order must be positive");
  if (k == 1) return a;
  if (sgn(a) == 0) return Rational(0);
  if (sgn(a) < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = rational_kth_root(-a, k);
    if (!r) return std::nullopt;
    return Rational(-*r);
  }
  Integer num, den;
  if (mpz_root(num.get_mpz_t(), a.get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), a.get_den_mpz_t(), k) == 0) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Dense polynomials over Q, ascending. Internal to the field module.

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RPoly rmul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

RPoly rsub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r; b nonzero.
void rdivmod(const RPoly& a, const RPoly& b, RPoly& q, RPoly& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Rational(0));
  Rational lead_inv = 1 / b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational f = r.back() * lead_inv;
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

RPoly rgcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly q, r;
    rdivmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// Returns s with s*a ≡ g (mod m), g = gcd(a, m) (not normalised).
RPoly rxgcd_inverse(const RPoly& a, const RPoly& m, RPoly& g) {
  RPoly r0 = m, r1 = a, s0, s1{Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    RPoly q, r;
    rdivmod(r0, r1, q, r);
    RPoly s = rsub(s0, rmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  g = r0;
  return s0;
}

std::string poly_string(const RPoly& p, std::string_view var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (k == 0 || !unit) os << to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldContext

ContextPtr FieldContext::make(std::vector<Rational> modulus) {
  trim(modulus);
  if (modulus.size() < 2) throw Error(Errc::BadSpec, "modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(Errc::NonMonic, "modulus " + poly_string(modulus, "t") + " is not monic");
  RPoly deriv;
  for (std::size_t k = 1; k < modulus.size(); ++k) deriv.push_back(modulus[k] * static_cast<long>(k));
  if (rgcd(modulus, deriv).size() > 1)
    throw Error(Errc::NotSquarefree, "modulus " + poly_string(modulus, "t") + " has a repeated factor");
  return ContextPtr(new FieldContext(std::move(modulus)));
}

ContextPtr FieldContext::rationals() {
  static const ContextPtr q = make({Rational(0), Rational(1)});
  return q;
}

ContextPtr FieldContext::gaussian() {
  static const ContextPtr g = make({Rational(1), Rational(0), Rational(1)});
  return g;
}

ContextPtr FieldContext::cyclotomic5() {
  static const ContextPtr z = make({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
  return z;
}

std::string FieldContext::modulus_string(std::string_view var) const { return poly_string(modulus_, var); }

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (!a || !b || !same_field(*a, *b))
    throw Error(Errc::ContextMismatch, "operands live in different field contexts");
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : FieldElement(FieldContext::rationals(), Rational(0)) {}

FieldElement::FieldElement(ContextPtr ctx, const Rational& value) : ctx_(std::move(ctx)) {
  c_.assign(static_cast<std::size_t>(ctx_->degree()), Rational(0));
  c_[0] = value;
}

FieldElement::FieldElement(ContextPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)) {
  const auto n = static_cast<std::size_t>(ctx_->degree());
  const auto& m = ctx_->modulus();
  trim(coeffs);
  // reduce modulo the monic modulus
  for (std::size_t k = coeffs.size(); k-- > n;) {
    Rational top = coeffs[k];
    if (sgn(top) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) coeffs[k - n + j] -= top * m[j];
    coeffs[k] = 0;
  }
  coeffs.resize(n, Rational(0));
  c_ = std::move(coeffs);
}

FieldElement FieldElement::generator(const ContextPtr& ctx) {
  return FieldElement(ctx, std::vector<Rational>{Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool FieldElement::is_rational() const noexcept {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool FieldElement::is_one() const noexcept { return is_rational() && c_[0] == 1; }

const Rational& FieldElement::rational_value() const {
  if (!is_rational()) throw Error(Errc::BadSpec, "element " + to_string() + " is not rational");
  return c_[0];
}

void FieldElement::check_same(const FieldElement& o) const { require_same_context(ctx_, o.ctx_); }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  const std::size_t n = c_.size();
  if (o.is_rational()) return *this *= o.c_[0];
  if (is_rational()) {
    Rational s = c_[0];
    c_ = o.c_;
    return *this *= s;
  }
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  const auto& m = ctx_->modulus();
  for (std::size_t k = prod.size(); k-- > n;) {
    if (sgn(prod[k]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[k - n + j] -= prod[k] * m[j];
  }
  prod.resize(n);
  c_ = std::move(prod);
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (is_rational()) return FieldElement(ctx_, Rational(1 / c_[0]));
  RPoly a = c_, g;
  trim(a);
  RPoly s = rxgcd_inverse(a, ctx_->modulus(), g);
  if (g.size() != 1)
    throw Error(Errc::NotInvertible, to_string() + " shares a factor with " + ctx_->modulus_string());
  Rational ginv = 1 / g[0];
  for (auto& c : s) c *= ginv;
  return FieldElement(ctx_, std::move(s));
}

FieldElement FieldElement::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement result = one(), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

std::string FieldElement::to_string() const {
  if (ctx_->is_base_field()) return b3q::to_string(c_[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += b3q::to_string(c_[i]);
  }
  return s + "]";
}

FieldElement FieldElement::parse(const ContextPtr& ctx, std::string_view text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) throw Error(Errc::BadEncoding, "empty field element");
  text.remove_prefix(first);
  if (text.front() != '[') return FieldElement(ctx, parse_rational(text));
  auto close = text.rfind(']');
  if (close == std::string_view::npos) throw Error(Errc::BadEncoding, "unterminated coefficient list");
  std::string_view body = text.substr(1, close - 1);
  std::vector<Rational> coeffs;
  while (!body.empty()) {
    auto comma = body.find(',');
    coeffs.push_back(parse_rational(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (coeffs.size() > static_cast<std::size_t>(ctx->degree()))
    throw Error(Errc::BadEncoding, "coefficient list longer than context degree");
  return FieldElement(ctx, std::move(coeffs));
}

}  // namespace b3q
