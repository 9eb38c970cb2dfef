#include "b3q/spectral.hpp"

namespace b3q {

namespace {

Polynomial lin(const FieldElement& root) { return Polynomial::linear(root); }

// λ^k + c
Polynomial binomial(const ContextPtr& ctx, int k, const FieldElement& c) {
  return Polynomial::monomial(ctx, k) + Polynomial::constant(c);
}

// λ^2 + sλ + s^2: the factor (λ - sν)(λ - sν^{-1})
Polynomial nu_pair(const FieldElement& s) {
  const auto& ctx = s.context();
  return Polynomial(ctx, std::vector<FieldElement>{s * s, s, s.one()});
}

}  // namespace

FieldElement central_value(const Representation& rep) {
  Matrix a = rep.g1 * rep.g2;
  Matrix b = a * rep.g1;
  auto c = a.pow(3).scalar_value();
  if (!c) throw Error(Errc::NotScalar, "(g1 g2)^3 is not scalar");
  auto c2 = b.pow(2).scalar_value();
  if (!c2 || *c2 != *c) throw Error(Errc::NotScalar, "(g1 g2 g1)^2 differs from (g1 g2)^3");
  return *c;
}

FieldElement expected_central(const RepSpec& spec) {
  spec.validate();
  const auto& xs = spec.params;
  switch (spec.dim) {
    case 1: return xs.x(1).pow(6);
    case 2: return -elementary_symmetric(xs, 2).pow(3);
    case 3: return elementary_symmetric(xs, 3).pow(2);
    case 4: return spec.roots.h->pow(3);
    case 5: return spec.roots.f->pow(6);
    case 6: return -xs.x(static_cast<std::size_t>(spec.variant)) * elementary_symmetric(xs, 5);
    default: throw Error(Errc::BadSpec, "unsupported dimension");
  }
}

TraceTriple expected_traces(const RepSpec& spec) {
  spec.validate();
  const auto& xs = spec.params;
  const auto& ctx = xs.context();
  FieldElement zero(ctx, 0L);
  switch (spec.dim) {
    case 1: {
      const auto& x = xs.x(1);
      return {x.pow(2), x.pow(4), x.pow(3)};
    }
    case 2: {
      // Spec A = -e2{ν, ν^{-1}}: Tr A = e2, Tr A^2 = e2^2 (ν^2 + ν^{-2}) = -e2^2
      FieldElement e2 = elementary_symmetric(xs, 2);
      return {e2, -e2 * e2, zero};
    }
    case 3: return {zero, zero, -elementary_symmetric(xs, 3)};
    case 4: {
      FieldElement e4 = elementary_symmetric(xs, 4);
      return {expected_central(spec) / e4, e4, zero};
    }
    case 5: {
      const auto& f = *spec.roots.f;
      return {-f.pow(2), -f.pow(4), f.pow(3)};
    }
    case 6: return {zero, zero, zero};
    default: throw Error(Errc::BadSpec, "unsupported dimension");
  }
}

std::pair<Polynomial, Polynomial> expected_charpolys(const RepSpec& spec) {
  spec.validate();
  const auto& xs = spec.params;
  const auto& ctx = xs.context();
  switch (spec.dim) {
    case 1: {
      const auto& x = xs.x(1);
      return {lin(x.pow(2)), lin(x.pow(3))};
    }
    case 2: {
      FieldElement e2 = elementary_symmetric(xs, 2);
      return {nu_pair(-e2), binomial(ctx, 2, e2.pow(3))};
    }
    case 3: {
      FieldElement e3 = elementary_symmetric(xs, 3);
      return {binomial(ctx, 3, -e3 * e3), lin(e3) * lin(-e3).pow(2)};
    }
    case 4: {
      const auto& h = *spec.roots.h;
      return {lin(h).pow(2) * nu_pair(h), binomial(ctx, 2, -h.pow(3)).pow(2)};
    }
    case 5: {
      const auto& f = *spec.roots.f;
      FieldElement f2 = f * f, f3 = f2 * f;
      return {lin(f2) * nu_pair(f2).pow(2), lin(f3).pow(3) * lin(-f3).pow(2)};
    }
    case 6: {
      FieldElement k = xs.x(static_cast<std::size_t>(spec.variant)) * elementary_symmetric(xs, 5);
      return {binomial(ctx, 3, k).pow(2), binomial(ctx, 2, k).pow(3)};
    }
    default: throw Error(Errc::BadSpec, "unsupported dimension");
  }
}

bool check_det_constraint(const Representation& rep) {
  const auto& xs = rep.spec.params;
  FieldElement det = xs.x(1).one();
  for (std::size_t i = 1; i <= xs.size(); ++i) det *= xs.x(i).pow(rep.multiplicities[i - 1]);
  return det.pow(6) == central_value(rep).pow(rep.dim());
}

SpectralReport check_spectrum(const Representation& rep) {
  const auto& ctx = rep.context();
  Matrix a = rep.g1 * rep.g2;
  Matrix b = a * rep.g1;
  auto [chi_a, chi_b] = expected_charpolys(rep.spec);
  TraceTriple tr = expected_traces(rep.spec);
  SpectralReport out{FieldElement(ctx, 0L), expected_central(rep.spec), a.trace(), (a * a).trace(), b.trace(),
                     tr.tr_a, tr.tr_a2, tr.tr_b, charpoly(a), charpoly(b), chi_a, chi_b, false, {}, false};

  auto record = [&out](std::string name, std::string expected, std::string actual, bool ok) {
    out.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  };
  auto compare = [&record](const std::string& name, const FieldElement& expected, const FieldElement& actual) {
    record(name, expected.to_string(), actual.to_string(), expected == actual);
  };

  Matrix a3 = a.pow(3), b2 = b.pow(2);
  auto c = a3.scalar_value();
  bool central_ok = c.has_value() && a3 == b2;
  out.c_rho = c.value_or(FieldElement(ctx, 0L));
  record("A^3 = B^2 = C*Id", "scalar", central_ok ? "scalar" : "not scalar", central_ok);
  compare("C_rho", out.c_expected, out.c_rho);
  compare("Tr A", out.tr_a_expected, out.tr_a);
  compare("Tr A^2", out.tr_a2_expected, out.tr_a2);
  compare("Tr B", out.tr_b_expected, out.tr_b);
  record("charpoly A", chi_a.to_string(), out.charpoly_a.to_string(), chi_a == out.charpoly_a);
  record("charpoly B", chi_b.to_string(), out.charpoly_b.to_string(), chi_b == out.charpoly_b);
  out.det_constraint_ok = central_ok && check_det_constraint(rep);
  record("det constraint", "true", out.det_constraint_ok ? "true" : "false", out.det_constraint_ok);

  out.all_ok = true;
  for (const auto& chk : out.checks) out.all_ok = out.all_ok && chk.ok;
  return out;
}

}  // namespace b3q
