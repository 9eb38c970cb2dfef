#include "b3q/reps.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace b3q {

// ---------------------------------------------------------------------------
// ParameterSet

ParameterSet::ParameterSet(ContextPtr ctx, std::vector<FieldElement> values)
    : ctx_(std::move(ctx)), values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::InvalidParameters, "X must be nonempty");
  if (values_.size() > 5)
    throw Error(Errc::InvalidParameters,
                "|X| = " + std::to_string(values_.size()) + " > 5: the quotient is infinite-dimensional unless 1/3 + 1/|X| > 1/2");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    require_same_context(ctx_, values_[i].context());
    if (values_[i].is_zero()) throw Error(Errc::InvalidParameters, "x" + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < i; ++j)
      if (values_[i] == values_[j])
        throw Error(Errc::InvalidParameters,
                    "x" + std::to_string(j + 1) + " = x" + std::to_string(i + 1) + "; eigenvalues must be distinct");
  }
}

ParameterSet ParameterSet::from_rationals(const ContextPtr& ctx, const std::vector<Rational>& values) {
  std::vector<FieldElement> xs;
  for (const auto& q : values) xs.emplace_back(ctx, q);
  return ParameterSet(ctx, std::move(xs));
}

const FieldElement& ParameterSet::x(std::size_t i) const {
  if (i < 1 || i > values_.size()) throw Error(Errc::IndexOutOfRange, "parameter index " + std::to_string(i));
  return values_[i - 1];
}

ParameterSet ParameterSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<FieldElement> xs;
  for (auto i : indices) xs.push_back(x(i));
  return ParameterSet(ctx_, std::move(xs));
}

ParameterSet ParameterSet::without(std::size_t i) const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k <= size(); ++k)
    if (k != i) idx.push_back(k);
  x(i);
  return subset(idx);
}

FieldElement elementary_symmetric(const std::vector<FieldElement>& xs, std::size_t k) {
  if (xs.empty()) throw Error(Errc::IndexOutOfRange, "e_k of an empty list");
  if (k > xs.size()) throw Error(Errc::IndexOutOfRange, "e_" + std::to_string(k) + " of " + std::to_string(xs.size()) + " values");
  // coefficients of ∏ (1 + x_i T)
  const auto& ctx = xs.front().context();
  std::vector<FieldElement> e(xs.size() + 1, FieldElement(ctx, 0L));
  e[0] = FieldElement(ctx, 1L);
  for (std::size_t n = 0; n < xs.size(); ++n)
    for (std::size_t j = n + 1; j >= 1; --j) e[j] += e[j - 1] * xs[n];
  return e[k];
}

FieldElement elementary_symmetric(const ParameterSet& xs, std::size_t k) { return elementary_symmetric(xs.values(), k); }

FieldElement delta(const std::vector<FieldElement>& xs, std::size_t i) {
  if (i < 1 || i > xs.size()) throw Error(Errc::IndexOutOfRange, "delta index " + std::to_string(i));
  FieldElement d = xs[i - 1].one();
  for (std::size_t j = 1; j <= xs.size(); ++j)
    if (j != i) d *= xs[j - 1] - xs[i - 1];
  return d;
}

FieldElement delta(const ParameterSet& xs, std::size_t i) { return delta(xs.values(), i); }

std::vector<FieldElement> transposed(std::vector<FieldElement> xs, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > xs.size() || j > xs.size())
    throw Error(Errc::IndexOutOfRange, "transposition indices out of range");
  std::swap(xs[i - 1], xs[j - 1]);
  return xs;
}

Polynomial parameter_polynomial(const ParameterSet& xs) { return Polynomial::from_roots(xs.context(), xs.values()); }

// ---------------------------------------------------------------------------
// Spec validation

void RepSpec::validate() const {
  const auto n = static_cast<int>(params.size());
  if (dim < 1 || dim > 6) throw Error(Errc::BadSpec, "dimension must be in 1..6");
  if (dim <= 5 && n != dim)
    throw Error(Errc::BadSpec, "dimension " + std::to_string(dim) + " needs |X| = " + std::to_string(dim));
  if (dim == 6) {
    if (n != 5) throw Error(Errc::BadSpec, "dimension 6 needs |X| = 5");
    if (variant < 1 || variant > 5) throw Error(Errc::BadSpec, "dimension-6 variant must be in 1..5");
  }
  if (dim == 4) {
    if (!roots.h) throw Error(Errc::MissingRoot, "dimension 4 needs a square root h of e4(X)");
    require_same_context(params.context(), roots.h->context());
    if (roots.h->pow(2) != elementary_symmetric(params, 4))
      throw Error(Errc::MissingRoot, "h = " + roots.h->to_string() + " does not square to e4(X)");
  }
  if (dim == 5) {
    if (!roots.f) throw Error(Errc::MissingRoot, "dimension 5 needs a fifth root f of e5(X)");
    require_same_context(params.context(), roots.f->context());
    if (roots.f->pow(5) != elementary_symmetric(params, 5))
      throw Error(Errc::MissingRoot, "f = " + roots.f->to_string() + " is not a fifth root of e5(X)");
  }
}

// ---------------------------------------------------------------------------
// Closed-form helpers

namespace table {

namespace {

const FieldElement& at(const std::vector<FieldElement>& xs, std::size_t i) { return xs.at(i - 1); }

std::vector<FieldElement> drop(const std::vector<FieldElement>& xs, std::size_t i) {
  std::vector<FieldElement> out;
  for (std::size_t k = 1; k <= xs.size(); ++k)
    if (k != i) out.push_back(at(xs, k));
  return out;
}

// the two members of {2,3,4} other than a
std::pair<std::size_t, std::size_t> others(std::size_t a) {
  if (a < 2 || a > 4) throw Error(Errc::IndexOutOfRange, "index must be in {2,3,4}");
  std::size_t b = a == 2 ? 3 : 2;
  std::size_t c = 9 - a - b;
  return {b, c};
}

}  // namespace

FieldElement alpha(const std::vector<FieldElement>& xs, const FieldElement& h, std::size_t i) {
  auto rest = drop(xs, i);
  return elementary_symmetric(rest, 3) * elementary_symmetric(rest, 1) - h * elementary_symmetric(rest, 2);
}

FieldElement beta(const std::vector<FieldElement>& xs, const FieldElement& h, std::size_t i) {
  return elementary_symmetric(xs, 4) / at(xs, i).pow(2) - h;
}

FieldElement gamma(const std::vector<FieldElement>& xs, const FieldElement& h, std::size_t a) {
  auto [b, c] = others(a);
  return at(xs, 1) * at(xs, a) + at(xs, b) * at(xs, c) - h;
}

FieldElement m_diag(const std::vector<FieldElement>& xs, const FieldElement& f, std::size_t i) {
  auto rest = drop(xs, i);
  FieldElement prod = f;
  for (const auto& xk : rest) prod *= f + xk;
  FieldElement num = elementary_symmetric(rest, 4) * elementary_symmetric(rest, 1) +
                     f * at(xs, i) * elementary_symmetric(rest, 3) + prod;
  return num / delta(xs, i);
}

FieldElement m_offdiag(const std::vector<FieldElement>& xs, const FieldElement& f, std::size_t i, std::size_t j) {
  const FieldElement& xi = at(xs, i);
  FieldElement num = xi * xi + f * xi + f * f;
  FieldElement f2 = f * f;
  for (std::size_t k = 1; k <= xs.size(); ++k)
    if (k != i && k != j) num *= f2 + xi * at(xs, k);
  return num / (f * xi * at(xs, j) * delta(xs, i));
}

FieldElement q(const std::vector<FieldElement>& xs, std::size_t a) {
  auto [b, c] = others(a);
  return at(xs, 1) * at(xs, a) + at(xs, b) * at(xs, c);
}

FieldElement p(const std::vector<FieldElement>& xs, std::size_t i) {
  return elementary_symmetric(xs, 5) - at(xs, i).pow(3) * at(xs, 5).pow(2);
}

FieldElement r(const std::vector<FieldElement>& xs) {
  const auto& x1 = at(xs, 1);
  const auto& x2 = at(xs, 2);
  // X∖{x2} = (x1, x3, x4, x5); x3 sits at position 2 there
  return at(xs, 3) / (x1 * (x2 - x1) * delta(drop(xs, 2), 2));
}

FieldElement v(const std::vector<FieldElement>& xs) {
  const auto& x1 = at(xs, 1);
  const auto& x2 = at(xs, 2);
  const auto& x5 = at(xs, 5);
  return p(xs, 2) / (x1 * x5 * (x2 - x1) * delta(drop(xs, 2), 4));
}

FieldElement u(const std::vector<FieldElement>& xs) {
  const auto& x1 = at(xs, 1);
  const auto& x2 = at(xs, 2);
  const auto& x3 = at(xs, 3);
  const auto& x4 = at(xs, 4);
  const auto& x5 = at(xs, 5);
  FieldElement num = x1 * x2 * (x3 + x4) * (x3 * x4 - x1 * x5) + x3 * x4 * (x2 - x1) * (x1 * x1 + x2 * x5);
  return num / ((x2 - x1) * delta(drop(xs, 2), 4));
}

FieldElement w(const std::vector<FieldElement>& xs) {
  const auto& x1 = at(xs, 1);
  const auto& x2 = at(xs, 2);
  const auto& x3 = at(xs, 3);
  const auto& x4 = at(xs, 4);
  const auto& x5 = at(xs, 5);
  FieldElement first = x1 * x2 * x3 * x4 * (x1 * x3 + x5 * (x2 + x4));
  FieldElement second = x5.pow(3) * (x1 * x3 * (x2 + x4) + x5 * x2 * x4);
  return p(xs, 1) * (first - second);
}

FieldElement z(const std::vector<FieldElement>& xs) {
  const auto& x1 = at(xs, 1);
  const auto& x5 = at(xs, 5);
  std::vector<FieldElement> mid{at(xs, 2), at(xs, 3), at(xs, 4)};
  FieldElement e1 = elementary_symmetric(mid, 1);
  FieldElement e2 = elementary_symmetric(mid, 2);
  FieldElement e3 = elementary_symmetric(mid, 3);
  FieldElement x5c = x5.pow(3);
  FieldElement head = (e1 * e3 - x1 * x1 * e2) * (x1 * e1 * e3 - e2 * x5c) * x1 * x5;
  FieldElement inner = x1 * x1 * (e1 - x1) * (e3 * (x1 - x5) - e1 * x5c) +
                       (x1 * e2 - e3) * (x1 * e2 + (x1 - x5) * x5 * x5) * x5;
  return head + e3 * (x1 - x5) * inner;
}

}  // namespace table

// ---------------------------------------------------------------------------
// Constructions

namespace {

using Xs = std::vector<FieldElement>;
using table::at;

// σ_{i1 j1} σ_{i2 j2} ... ∘ f: the leftmost transposition acts on X first.
FieldElement sigma(const std::function<FieldElement(const Xs&)>& fn, const Xs& xs,
                   std::initializer_list<std::pair<std::size_t, std::size_t>> swaps) {
  Xs y = xs;
  for (auto [i, j] : swaps) y = transposed(std::move(y), i, j);
  return fn(y);
}

Matrix g2_dim1(const Xs& xs) { return Matrix::diagonal(xs[0].context(), {xs[0]}); }

Matrix g2_dim2(const Xs& xs) {
  const auto& ctx = xs[0].context();
  const auto& x1 = at(xs, 1);
  const auto& x2 = at(xs, 2);
  FieldElement s = (x1 - x2).inverse();
  Matrix m(ctx, 2, 2);
  m(0, 0) = -x2 * x2 * s;
  m(0, 1) = -x1 * x2 * s;
  m(1, 0) = (x1 * x1 - x1 * x2 + x2 * x2) * s;
  m(1, 1) = x1 * x1 * s;
  return m;
}

Matrix g2_dim3(const Xs& xs) {
  const auto& ctx = xs[0].context();
  const auto& x1 = at(xs, 1);
  const auto& x2 = at(xs, 2);
  const auto& x3 = at(xs, 3);
  FieldElement d1 = delta(xs, 1).inverse(), d2 = delta(xs, 2).inverse(), d3 = delta(xs, 3).inverse();
  Matrix m(ctx, 3, 3);
  FieldElement k1 = x1 * x1 + x2 * x3, k2 = x2 * x2 + x1 * x3, k3 = x3 * x3 + x1 * x2;
  m(0, 0) = x2 * x3 * (x2 + x3) * d1;
  m(0, 1) = x3 * k1 * d1;
  m(0, 2) = x2 * k1 * d1;
  m(1, 0) = x3 * k2 * d2;
  m(1, 1) = x1 * x3 * (x1 + x3) * d2;
  m(1, 2) = x1 * k2 * d2;
  m(2, 0) = x2 * k3 * d3;
  m(2, 1) = x1 * k3 * d3;
  m(2, 2) = x1 * x2 * (x1 + x2) * d3;
  return m;
}

Matrix g2_dim4(const Xs& xs, const FieldElement& h) {
  const auto& ctx = xs[0].context();
  using namespace table;
  FieldElement g2 = gamma(xs, h, 2), g3 = gamma(xs, h, 3), g4 = gamma(xs, h, 4);
  Matrix m(ctx, 4, 4);
  for (std::size_t i = 1; i <= 4; ++i) {
    FieldElement b = beta(xs, h, i);
    for (std::size_t j = 1; j <= 4; ++j) {
      FieldElement e = b;
      if (i == j) {
        e = alpha(xs, h, i);
      } else if (i == 1) {
        if (j == 2) e *= g3 * g4;
        if (j == 3) e *= g2 * g4;
        if (j == 4) e *= g2 * g3;
      } else if (j != 1) {
        e *= gamma(xs, h, i);
      }
      m(i - 1, j - 1) = e;
    }
    FieldElement dinv = delta(xs, i).inverse();
    for (std::size_t j = 0; j < 4; ++j) m(i - 1, j) *= dinv;
  }
  return m;
}

Matrix g2_dim5(const Xs& xs, const FieldElement& f) {
  const auto& ctx = xs[0].context();
  Matrix m(ctx, 5, 5);
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = 1; j <= 5; ++j)
      m(i - 1, j - 1) = i == j ? table::m_diag(xs, f, i) : table::m_offdiag(xs, f, i, j);
  return m;
}

// The representation with C = -x5 e5(X), g1 = diag(x1, x2, x3, x4, x5, x5).
Matrix g2_dim6(const Xs& xs) {
  using namespace table;
  const auto& ctx = xs[0].context();
  Matrix g(ctx, 6, 6);
  auto set = [&g](std::size_t i, std::size_t j, FieldElement value) { g(i - 1, j - 1) = std::move(value); };
  auto D = [&xs](std::size_t i) { return delta(xs, i); };

  // G: rows/cols 1..4
  for (std::size_t i = 1; i <= 4; ++i) {
    Xs rest;
    for (std::size_t k = 1; k <= 5; ++k)
      if (k != i) rest.push_back(at(xs, k));
    FieldElement num = elementary_symmetric(rest, 4) * elementary_symmetric(rest, 1) -
                       at(xs, i) * at(xs, 5) * elementary_symmetric(rest, 3);
    set(i, i, num / D(i));
  }
  const FieldElement& x1 = at(xs, 1);
  for (std::size_t a = 2; a <= 4; ++a) {
    std::size_t b = a == 2 ? 3 : 2;
    std::size_t c = 9 - a - b;
    set(1, a, p(xs, a) * q(xs, b) * q(xs, c) / (x1 * x1 * D(a)));
    set(a, 1, p(xs, 1) / (at(xs, a).pow(2) * D(1)));
    for (std::size_t bb = 2; bb <= 4; ++bb)
      if (bb != a) set(a, bb, q(xs, a) * p(xs, bb) / (at(xs, a).pow(2) * D(bb)));
  }

  // G31
  set(5, 1, D(1).inverse());
  set(6, 2, D(2).inverse());

  // G32
  set(5, 3, q(xs, 4) * r(xs));
  set(5, 4, q(xs, 3) * sigma(r, xs, {{3, 4}}));
  set(6, 3, sigma(r, xs, {{1, 2}}));
  set(6, 4, sigma(r, xs, {{1, 2}, {3, 4}}));

  // G33
  set(5, 5, u(xs));
  set(5, 6, q(xs, 3) * q(xs, 4) * v(xs));
  set(6, 5, sigma(v, xs, {{1, 2}}));
  set(6, 6, sigma(u, xs, {{1, 2}}));

  // G23
  const FieldElement& x3 = at(xs, 3);
  const FieldElement& x4 = at(xs, 4);
  const FieldElement& x5 = at(xs, 5);
  FieldElement k23 = (x5 * D(5)).inverse();
  set(3, 5, k23 * w(xs) / (x3 * x3));
  set(3, 6, k23 * q(xs, 3) * sigma(w, xs, {{1, 2}}) / (x3 * x3));
  set(4, 5, k23 * sigma(w, xs, {{3, 4}}) / (x4 * x4));
  set(4, 6, k23 * q(xs, 4) * sigma(w, xs, {{1, 2}, {3, 4}}) / (x4 * x4));

  // G13
  const FieldElement& x2 = at(xs, 2);
  FieldElement k13 = D(5).inverse();
  set(1, 5, k13 * z(xs) / x1);
  set(1, 6, k13 * q(xs, 3) * q(xs, 4) * sigma(w, xs, {{1, 2}, {2, 3}}) / (x1 * x1 * x5));
  set(2, 5, k13 * sigma(w, xs, {{2, 3}}) / (x2 * x2 * x5));
  set(2, 6, k13 * sigma(z, xs, {{1, 2}}) / x2);
  return g;
}

}  // namespace

bool verify_braid_relation(const Representation& rep) {
  return rep.g1 * rep.g2 * rep.g1 == rep.g2 * rep.g1 * rep.g2;
}

bool verify_minimal_polynomial(const Representation& rep) {
  Polynomial px = parameter_polynomial(rep.spec.params);
  for (const Matrix* g : {&rep.g1, &rep.g2}) {
    if (!evaluate(px, *g).is_zero()) return false;
    if (minpoly(*g) != px) return false;
  }
  return true;
}

Representation build_rep(const RepSpec& spec) {
  spec.validate();
  const auto& ctx = spec.params.context();
  const Xs& xs = spec.params.values();
  Representation rep{spec, Matrix(ctx, 0, 0), Matrix(ctx, 0, 0), std::vector<int>(xs.size(), 1)};
  switch (spec.dim) {
    case 1: rep.g2 = g2_dim1(xs); break;
    case 2: rep.g2 = g2_dim2(xs); break;
    case 3: rep.g2 = g2_dim3(xs); break;
    case 4: rep.g2 = g2_dim4(xs, *spec.roots.h); break;
    case 5: rep.g2 = g2_dim5(xs, *spec.roots.f); break;
    case 6: {
      // ρ_i = σ_{i5} ∘ ρ_5
      const auto i = static_cast<std::size_t>(spec.variant);
      Xs swapped = i == 5 ? xs : transposed(xs, i, 5);
      rep.g2 = g2_dim6(swapped);
      Xs diag = swapped;
      diag.push_back(swapped.back());
      rep.g1 = Matrix::diagonal(ctx, diag);
      rep.multiplicities[i - 1] = 2;
      break;
    }
    default: throw Error(Errc::BadSpec, "unsupported dimension");
  }
  if (spec.dim <= 5) rep.g1 = Matrix::diagonal(ctx, xs);
  if (!verify_braid_relation(rep))
    throw Error(Errc::BadSpec, "constructed matrices violate g1 g2 g1 = g2 g1 g2 (dimension " + std::to_string(spec.dim) + ")");
  if (!verify_minimal_polynomial(rep))
    throw Error(Errc::BadSpec, "constructed g2 does not have minimal polynomial P_X (dimension " + std::to_string(spec.dim) + ")");
  return rep;
}

Representation transpose_parameters(const Representation& rep, std::size_t i, std::size_t j) {
  if (i == j) throw Error(Errc::IndexOutOfRange, "transposition needs distinct indices");
  RepSpec spec = rep.spec;
  spec.params = ParameterSet(spec.params.context(), transposed(spec.params.values(), i, j));
  if (spec.dim == 6) {
    auto v = static_cast<std::size_t>(spec.variant);
    if (v == i) spec.variant = static_cast<int>(j);
    else if (v == j) spec.variant = static_cast<int>(i);
  }
  return build_rep(spec);
}

// ---------------------------------------------------------------------------
// Roots

namespace {

void push_unique(std::vector<FieldElement>& out, const FieldElement& x) {
  if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
}

}  // namespace

std::vector<FieldElement> find_kth_roots(const FieldElement& a, unsigned k, const RootHints& hints) {
  const auto& ctx = a.context();
  std::vector<FieldElement> seeds{FieldElement(ctx, 1L)};
  if (!ctx->is_base_field()) seeds.push_back(FieldElement::generator(ctx));
  for (const auto& h : hints.elements) {
    require_same_context(ctx, h.context());
    if (!h.is_zero()) seeds.push_back(h);
  }

  // k-th roots of unity among ±s^j
  std::vector<FieldElement> units;
  for (const auto& s : seeds) {
    FieldElement power = s.one();
    for (unsigned j = 0; j < 2 * k + 1; ++j) {
      for (const FieldElement& cand : {power, -power})
        if (cand.pow(k).is_one()) push_unique(units, cand);
      power *= s;
    }
  }

  std::vector<FieldElement> base;
  if (a.is_zero()) return {a};
  for (const auto& s : seeds) {
    FieldElement sk = s.pow(k);
    if (!sk.is_rational()) continue;
    FieldElement ratio = a / sk;
    if (!ratio.is_rational()) continue;
    if (auto r0 = rational_kth_root(ratio.rational_value(), k)) push_unique(base, s * *r0);
  }

  std::vector<FieldElement> roots;
  for (const auto& b : base)
    for (const auto& unit : units) {
      FieldElement cand = b * unit;
      if (cand.pow(k) == a) push_unique(roots, cand);
    }
  return roots;
}

std::vector<FieldElement> fifth_roots_via_zeta5(const Rational& f0, const ContextPtr& zeta5_ctx) {
  if (!same_field(*zeta5_ctx, *FieldContext::cyclotomic5()))
    throw Error(Errc::ContextMismatch, "expected the context t^4 + t^3 + t^2 + t + 1");
  FieldElement zeta = FieldElement::generator(zeta5_ctx);
  std::vector<FieldElement> out;
  for (int k = 0; k < 5; ++k) out.push_back(zeta.pow(k) * f0);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::string rep_label(const Representation& rep, const std::vector<std::size_t>& subset) {
  std::ostringstream os;
  os << "rho" << rep.spec.dim;
  if (rep.spec.dim == 4) os << "[h=" << rep.spec.roots.h->to_string() << "]";
  if (rep.spec.dim == 5) os << "[f=" << rep.spec.roots.f->to_string() << "]";
  if (rep.spec.dim == 6) os << "[i=" << rep.spec.variant << "]";
  os << "(";
  for (std::size_t k = 0; k < subset.size(); ++k) os << (k ? "," : "") << subset[k];
  os << ")";
  return os.str();
}

IrrepEnumeration enumerate_irreps(const ParameterSet& xs, const RootHints& hints) {
  const std::size_t n = xs.size();
  std::vector<std::vector<std::size_t>> subsets;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i)) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end());

  IrrepEnumeration out;
  auto add = [&out](const std::vector<std::size_t>& subset, RepSpec spec) {
    Representation rep = build_rep(spec);
    std::string label = rep_label(rep, subset);
    out.reps.push_back({subset, std::move(rep), std::move(label)});
  };
  for (const auto& subset : subsets) {
    ParameterSet sub = xs.subset(subset);
    const int d = static_cast<int>(subset.size());
    if (d <= 3) {
      add(subset, RepSpec{d, sub, {}, 5});
    } else {
      const unsigned k = d == 4 ? 2 : 5;
      FieldElement target = elementary_symmetric(sub, static_cast<std::size_t>(d));
      auto roots = find_kth_roots(target, k, hints);
      for (const auto& root : roots) {
        RootChoice rc;
        (d == 4 ? rc.h : rc.f) = root;
        add(subset, RepSpec{d, sub, rc, 5});
      }
      if (roots.size() < k) {
        std::string tv = target.is_rational() ? to_string(target.rational_value()) : target.to_string();
        std::string mod = "t^" + std::to_string(k) + " - (" + tv + ")";
        out.deferred.push_back({subset, d, mod, roots.size(), k});
      }
    }
    if (d == 5)
      for (int i = 1; i <= 5; ++i) add(subset, RepSpec{6, sub, {}, i});
  }
  return out;
}

}  // namespace b3q
