#include "b3q/analysis.hpp"

#include <algorithm>
#include <map>

namespace b3q {

namespace {

using Index = std::vector<std::size_t>;

std::string join(const Index& idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(idx[k]);
  }
  return s;
}

// t^k - c
Polynomial root_modulus(const FieldElement& c, int k) {
  const auto& ctx = c.context();
  std::vector<FieldElement> co(static_cast<std::size_t>(k) + 1, c.zero());
  co.front() = -c;
  co.back() = c.one();
  return Polynomial(ctx, std::move(co));
}

// Either P(root) or Res_t(t^k - e, P(t)), depending on which is supplied.
struct RootSource {
  std::optional<FieldElement> root;
  std::optional<Polynomial> modulus;
};

FieldElement at_root(const RootSource& src, std::vector<FieldElement> coeffs) {
  const auto& ctx = coeffs.front().context();
  Polynomial p(ctx, std::move(coeffs));
  if (src.root) return p(*src.root);
  return poly_resultant(*src.modulus, p);
}

PredicateValue make(PredicateFamily fam, Index idx, FieldElement value, bool resultant) {
  return PredicateValue{fam, std::move(idx), {}, std::move(value), resultant};
}

std::vector<PredicateValue> level_predicates(const std::vector<FieldElement>& x, int level, const RootSource& src) {
  // x is 0-based here; names use 1-based positions.
  std::vector<PredicateValue> out;
  const std::size_t n = x.size();
  const bool res = !src.root.has_value();
  switch (level) {
    case 2:
      out.push_back(make(PredicateFamily::I2, {1, 2}, x[0] * x[0] - x[0] * x[1] + x[1] * x[1], false));
      break;
    case 3:
      for (std::size_t i = 0; i < 3; ++i) {
        std::size_t j = i == 0 ? 1 : 0, k = i == 2 ? 1 : 2;
        out.push_back(make(PredicateFamily::I3, {i + 1, j + 1, k + 1}, x[i] * x[i] + x[j] * x[k], false));
      }
      break;
    case 4: {
      for (std::size_t i = 0; i < 4; ++i)
        out.push_back(make(PredicateFamily::I4, {i + 1}, at_root(src, {x[i] * x[i], -x[i].one()}), res));
      for (std::size_t j : {1, 2, 3}) {
        Index rest;
        for (std::size_t k = 1; k < 4; ++k)
          if (k != j) rest.push_back(k);
        FieldElement c = x[0] * x[j] + x[rest[0]] * x[rest[1]];
        out.push_back(make(PredicateFamily::J4, {1, j + 1, rest[0] + 1, rest[1] + 1}, at_root(src, {c, -c.one()}), res));
      }
      break;
    }
    case 5:
      for (std::size_t i = 0; i < 5; ++i)
        out.push_back(make(PredicateFamily::I5, {i + 1}, at_root(src, {x[i] * x[i], x[i], x[i].one()}), res));
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
          out.push_back(make(PredicateFamily::J5, {i + 1, j + 1}, at_root(src, {x[i] * x[j], x[i].zero(), x[i].one()}), res));
      break;
    case 6: {
      FieldElement e5 = elementary_symmetric(x, 5);
      for (std::size_t i = 0; i < n; ++i) out.push_back(make(PredicateFamily::I6, {i + 1}, e5 + x[i].pow(5), false));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j)
            out.push_back(make(PredicateFamily::J6, {i + 1, j + 1}, e5 - x[i].pow(3) * x[j] * x[j], false));
      for (std::size_t i = 0; i < n; ++i) {
        Index r;
        for (std::size_t k = 0; k < n; ++k)
          if (k != i) r.push_back(k);
        const std::size_t pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& pr : pairings) {
          std::size_t a = r[pr[0]], b = r[pr[1]], c = r[pr[2]], d = r[pr[3]];
          out.push_back(make(PredicateFamily::K6, {i + 1, a + 1, b + 1, c + 1, d + 1}, x[a] * x[b] + x[c] * x[d], false));
        }
      }
      break;
    }
    default: throw Error(Errc::BadLevel, "predicate level must be in 2..6, got " + std::to_string(level));
  }
  return out;
}

std::vector<Index> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Index> out;
  Index cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Invariant subspaces

struct Layout {
  std::vector<std::size_t> simple;          // 0-based coordinates with a simple g1-eigenvalue
  std::optional<std::pair<std::size_t, std::size_t>> plane;  // repeated eigenvalue
};

Layout layout_of(const Representation& rep) {
  const std::size_t n = rep.g1.rows();
  Layout lay;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> group{i};
    for (std::size_t j = i + 1; j < n; ++j)
      if (rep.g1(j, j) == rep.g1(i, i)) group.push_back(j);
    for (auto j : group) used[j] = true;
    if (group.size() == 1) {
      lay.simple.push_back(i);
    } else if (group.size() == 2 && !lay.plane) {
      lay.plane = std::make_pair(group[0], group[1]);
    } else {
      throw Error(Errc::BadSpec, "g1 eigenspaces beyond one plane are not supported by the witness search");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !rep.g1(i, j).is_zero()) throw Error(Errc::BadSpec, "g1 is not diagonal");
  return lay;
}

using Line = std::pair<FieldElement, FieldElement>;

Line normalized(Line l) {
  if (!l.first.is_zero()) {
    FieldElement inv = l.first.inverse();
    return {l.first.one(), l.second * inv};
  }
  return {l.second.zero(), l.second.one()};
}

bool collinear(const Line& a, const Line& b) { return a.first * b.second == a.second * b.first; }

void add_line(std::vector<Line>& out, const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() && b.is_zero()) return;
  Line l = normalized({a, b});
  for (const auto& m : out)
    if (collinear(m, l)) return;
  out.push_back(std::move(l));
}

// Candidate lines in the plane compatible with the simple coordinates Y.
std::vector<Line> candidate_lines(const Representation& rep, const Layout& lay, const Index& y) {
  const auto& g = rep.g2;
  const auto& ctx = rep.context();
  auto [p, q] = *lay.plane;
  std::vector<Line> out;

  // Rows outside Y and outside the plane must annihilate the line.
  std::vector<std::size_t> rows;
  for (auto s : lay.simple)
    if (std::find(y.begin(), y.end(), s) == y.end()) rows.push_back(s);
  if (!rows.empty()) {
    Matrix m(ctx, rows.size(), 2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m(r, 0) = g(rows[r], p);
      m(r, 1) = g(rows[r], q);
    }
    auto ker = kernel_basis(m);
    if (ker.size() == 1) add_line(out, ker[0][0], ker[0][1]);
  }
  // Images of e_j, j in Y, projected to the plane.
  for (auto j : y) add_line(out, g(p, j), g(q, j));

  // Eigenlines of the plane block.
  Matrix blk(ctx, 2, 2);
  blk(0, 0) = g(p, p);
  blk(0, 1) = g(p, q);
  blk(1, 0) = g(q, p);
  blk(1, 1) = g(q, q);
  std::vector<FieldElement> eig;
  for (const auto& x : rep.spec.params.values()) eig.push_back(x);
  FieldElement tr = blk.trace(), det = determinant(blk);
  FieldElement disc = tr * tr - det * Rational(4);
  RootHints hints;
  hints.elements = rep.spec.params.values();
  for (const auto& s : find_kth_roots(disc, 2, hints)) eig.push_back((tr + s) * Rational(1, 2));
  for (const auto& lam : eig) {
    Matrix shifted = blk - Matrix::identity(ctx, 2) * lam;
    auto ker = kernel_basis(shifted);
    if (ker.size() == 1) add_line(out, ker[0][0], ker[0][1]);
  }
  FieldElement one(ctx, 1L), zero(ctx, 0L);
  add_line(out, one, zero);
  add_line(out, zero, one);
  add_line(out, one, one);
  return out;
}

struct Candidate {
  Index y;           // 0-based simple coordinates
  int plane = 0;     // 0 none, 1 line, 2 whole plane
  std::optional<Line> line;

  std::size_t dim() const { return y.size() + static_cast<std::size_t>(plane); }
};

std::vector<Vector> candidate_basis(const Representation& rep, const Layout& lay, const Candidate& c) {
  const auto& ctx = rep.context();
  const std::size_t n = rep.g1.rows();
  std::vector<Vector> out;
  auto unit = [&](std::size_t k) {
    Vector v(n, FieldElement(ctx, 0L));
    v[k] = FieldElement(ctx, 1L);
    return v;
  };
  for (auto k : c.y) out.push_back(unit(k));
  if (c.plane == 2) {
    out.push_back(unit(lay.plane->first));
    out.push_back(unit(lay.plane->second));
  } else if (c.plane == 1) {
    Vector v(n, FieldElement(ctx, 0L));
    v[lay.plane->first] = c.line->first;
    v[lay.plane->second] = c.line->second;
    out.push_back(std::move(v));
  }
  return out;
}

// Extend the basis by standard vectors, change basis and require the
// lower-left block of every generator to vanish.
bool spans_invariant(const Representation& rep, const std::vector<Vector>& basis) {
  const std::size_t n = rep.g1.rows(), k = basis.size();
  if (k == 0 || k >= n) return false;
  const auto& ctx = rep.context();
  EchelonBasis ech(n);
  std::vector<Vector> cols;
  for (const auto& v : basis) {
    if (!ech.insert(v)) return false;
    cols.push_back(v);
  }
  for (std::size_t j = 0; j < n && cols.size() < n; ++j) {
    Vector e(n, FieldElement(ctx, 0L));
    e[j] = FieldElement(ctx, 1L);
    if (ech.insert(e)) cols.push_back(std::move(e));
  }
  Matrix t(ctx, n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) t(r, c) = cols[c][r];
  Matrix ti = inverse(t);
  for (const Matrix* g : {&rep.g1, &rep.g2}) {
    Matrix adapted = ti * (*g) * t;
    for (std::size_t r = k; r < n; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if (!adapted(r, c).is_zero()) return false;
  }
  return true;
}

std::vector<Candidate> search_candidates(const Representation& rep, const Layout& lay) {
  const std::size_t n = rep.g1.rows();
  const std::size_t s = lay.simple.size();
  std::vector<Candidate> out;
  for (unsigned mask = 0; mask < (1U << s); ++mask) {
    Index y;
    for (std::size_t b = 0; b < s; ++b)
      if (mask & (1U << b)) y.push_back(lay.simple[b]);
    out.push_back({y, 0, std::nullopt});
    if (lay.plane) {
      for (auto& l : candidate_lines(rep, lay, y)) out.push_back({y, 1, l});
      out.push_back({y, 2, std::nullopt});
    }
  }
  std::erase_if(out, [n](const Candidate& c) { return c.dim() == 0 || c.dim() >= n; });
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.y != b.y) return a.y < b.y;
    return a.plane < b.plane;
  });
  return out;
}

Witness to_witness(const Layout& lay, const Candidate& c) {
  Witness w;
  for (auto k : c.y) w.index_set.push_back(k + 1);
  if (c.plane == 2) {
    w.index_set.push_back(lay.plane->first + 1);
    w.index_set.push_back(lay.plane->second + 1);
  } else if (c.plane == 1) {
    const auto& [a, b] = *c.line;
    if (b.is_zero()) {
      w.index_set.push_back(lay.plane->first + 1);
    } else if (a.is_zero()) {
      w.index_set.push_back(lay.plane->second + 1);
    } else {
      w.line = c.line;
    }
  }
  std::sort(w.index_set.begin(), w.index_set.end());
  return w;
}

Candidate from_witness(const Representation& rep, const Layout& lay, const Witness& w) {
  const std::size_t n = rep.g1.rows();
  const auto& ctx = rep.context();
  Candidate c;
  bool has_p = false, has_q = false;
  for (auto i : w.index_set) {
    if (i < 1 || i > n) throw Error(Errc::InvalidWitness, "coordinate " + std::to_string(i) + " out of range");
    std::size_t k = i - 1;
    if (lay.plane && k == lay.plane->first) {
      has_p = true;
    } else if (lay.plane && k == lay.plane->second) {
      has_q = true;
    } else {
      c.y.push_back(k);
    }
  }
  std::sort(c.y.begin(), c.y.end());
  if (std::adjacent_find(c.y.begin(), c.y.end()) != c.y.end())
    throw Error(Errc::InvalidWitness, "repeated coordinate in witness");
  if (w.line) {
    if (!lay.plane) throw Error(Errc::InvalidWitness, "line given but g1 has no repeated eigenvalue");
    if (has_p || has_q) throw Error(Errc::InvalidWitness, "line given together with a plane coordinate");
    require_same_context(ctx, w.line->first.context());
    require_same_context(ctx, w.line->second.context());
    if (w.line->first.is_zero() && w.line->second.is_zero()) throw Error(Errc::InvalidWitness, "zero line");
    c.plane = 1;
    c.line = normalized(*w.line);
  } else if (has_p && has_q) {
    c.plane = 2;
  } else if (has_p || has_q) {
    c.plane = 1;
    c.line = has_p ? Line{FieldElement(ctx, 1L), FieldElement(ctx, 0L)} : Line{FieldElement(ctx, 0L), FieldElement(ctx, 1L)};
  }
  return c;
}

std::vector<Matrix> generators(const Representation& rep) { return {rep.g1, rep.g2}; }

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::string family_name(PredicateFamily f) {
  switch (f) {
    case PredicateFamily::I2: return "I2";
    case PredicateFamily::I3: return "I3";
    case PredicateFamily::I4: return "I4";
    case PredicateFamily::J4: return "J4";
    case PredicateFamily::I5: return "I5";
    case PredicateFamily::J5: return "J5";
    case PredicateFamily::I6: return "I6";
    case PredicateFamily::J6: return "J6";
    case PredicateFamily::K6: return "K6";
  }
  return "?";
}

std::string PredicateValue::name() const {
  std::string s = family_name(family) + "(" + join(indices) + ")";
  if (!root_subset.empty()) s += "[" + join(root_subset) + "]";
  return s;
}

std::vector<PredicateValue> evaluate_predicates(const ParameterSet& xs, int level) {
  const std::size_t need = level == 6 ? 5 : static_cast<std::size_t>(level);
  if (level < 2 || level > 6) throw Error(Errc::BadLevel, "predicate level must be in 2..6, got " + std::to_string(level));
  if (xs.size() != need)
    throw Error(Errc::BadLevel, "level " + std::to_string(level) + " needs |X| = " + std::to_string(need));
  RootSource src;
  if (level == 4 || level == 5) {
    src.modulus = root_modulus(elementary_symmetric(xs, static_cast<std::size_t>(level)), level == 4 ? 2 : 5);
  } else {
    src.root = xs.x(1).one();  // unused by these families
  }
  return level_predicates(xs.values(), level, src);
}

std::vector<PredicateValue> rep_predicates(const Representation& rep) {
  const auto& spec = rep.spec;
  if (spec.dim == 1) return {};
  RootSource src;
  src.root = spec.dim == 4 ? *spec.roots.h : spec.dim == 5 ? *spec.roots.f : spec.params.x(1).one();
  return level_predicates(spec.params.values(), spec.dim, src);
}

bool predicted_irreducible(const Representation& rep) {
  for (const auto& p : rep_predicates(rep))
    if (p.is_zero()) return false;
  return true;
}

bool irreducible_oracle(const Representation& rep) {
  const auto d = static_cast<std::size_t>(rep.g1.rows());
  return algebra_closure_dim(generators(rep)) == d * d;
}

std::vector<Vector> witness_basis(const Representation& rep, const Witness& w) {
  Layout lay = layout_of(rep);
  return candidate_basis(rep, lay, from_witness(rep, lay, w));
}

bool verify_witness(const Representation& rep, const Witness& w) { return spans_invariant(rep, witness_basis(rep, w)); }

std::optional<Witness> invariant_subspace_witness(const Representation& rep) {
  Layout lay = layout_of(rep);
  for (const auto& c : search_candidates(rep, lay))
    if (spans_invariant(rep, candidate_basis(rep, lay, c))) return to_witness(lay, c);
  return std::nullopt;
}

std::vector<Witness> all_witnesses(const Representation& rep) {
  Layout lay = layout_of(rep);
  std::vector<Witness> out;
  for (const auto& c : search_candidates(rep, lay))
    if (spans_invariant(rep, candidate_basis(rep, lay, c))) out.push_back(to_witness(lay, c));
  return out;
}

bool decomposability_check(const Representation& rep, const Witness& w) {
  Layout lay = layout_of(rep);
  Candidate c = from_witness(rep, lay, w);
  auto basis = candidate_basis(rep, lay, c);
  if (!spans_invariant(rep, basis)) throw Error(Errc::InvalidWitness, "witness subspace is not invariant");

  Index comp;
  for (auto s : lay.simple)
    if (std::find(c.y.begin(), c.y.end(), s) == c.y.end()) comp.push_back(s);

  std::vector<Candidate> options;
  if (!lay.plane || c.plane == 2) {
    options.push_back({comp, 0, std::nullopt});
  } else if (c.plane == 0) {
    options.push_back({comp, 2, std::nullopt});
  } else {
    for (auto& l : candidate_lines(rep, lay, comp))
      if (!collinear(l, *c.line)) options.push_back({comp, 1, l});
  }
  const std::size_t n = rep.g1.rows();
  for (const auto& o : options) {
    auto ob = candidate_basis(rep, lay, o);
    if (!spans_invariant(rep, ob)) continue;
    EchelonBasis ech(n);
    for (const auto& v : basis) ech.insert(v);
    for (const auto& v : ob) ech.insert(v);
    if (ech.size() == n) return true;
  }
  return false;
}

std::vector<BraidWord> default_probe_words() {
  std::vector<BraidWord> out;
  for (const char* s : {"s1", "s2", "s1 s2", "s1 s2 s1", "s1^2 s2", "s1^3 s2"}) out.push_back(parse_word(s));
  return out;
}

std::vector<BraidWord> words_of_length(std::size_t length) {
  const Factor letters[4] = {{Generator::g1, 1}, {Generator::g1, -1}, {Generator::g2, 1}, {Generator::g2, -1}};
  std::vector<BraidWord> out{BraidWord{}};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<BraidWord> next;
    for (const auto& w : out)
      for (const auto& f : letters) {
        BraidWord v = w;
        v.factors.push_back(f);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<FieldElement> character(const Representation& rep, const std::vector<BraidWord>& words) {
  WordEvaluator ev(rep);
  std::vector<FieldElement> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(ev(w).trace());
  return out;
}

bool intertwiner_exists(const Representation& lhs, const Representation& rhs) {
  if (lhs.g1.rows() != rhs.g1.rows()) return false;
  return !intertwiners(generators(lhs), generators(rhs)).empty();
}

std::size_t algebra_dimension(std::size_t n) {
  static const std::size_t dims[] = {0, 1, 6, 24, 96, 600};
  if (n < 1 || n > 5) throw Error(Errc::InvalidParameters, "|X| must be in 1..5");
  return dims[n];
}

CensusReport semisimplicity(const ParameterSet& xs) {
  CensusReport rep;
  const std::size_t n = xs.size();
  rep.parameter_count = n;
  rep.algebra_dim = algebra_dimension(n);
  std::vector<PredicateValue> all;
  for (std::size_t k = 2; k <= n; ++k) {
    for (const auto& sub : subsets_of_size(n, k)) {
      ParameterSet s = xs.subset(sub);
      for (auto p : evaluate_predicates(s, static_cast<int>(k))) {
        for (auto& i : p.indices) i = sub[i - 1];
        if (p.family == PredicateFamily::I4 && sub.size() < n) p.root_subset = sub;
        all.push_back(std::move(p));
      }
    }
  }
  if (n == 5)
    for (auto& p : evaluate_predicates(xs, 6)) all.push_back(std::move(p));
  rep.predicates_checked = all.size();
  for (auto& p : all)
    if (p.is_zero()) rep.failing_predicates.push_back(std::move(p));
  rep.semisimple_verdict = rep.failing_predicates.empty();
  return rep;
}

CensusReport dimension_census(const ParameterSet& xs, CensusMode mode, const RootHints& hints) {
  CensusReport rep = semisimplicity(xs);
  rep.mode = mode;
  if (!rep.semisimple_verdict) {
    std::string names;
    for (const auto& p : rep.failing_predicates) names += (names.empty() ? "" : ", ") + p.name();
    throw Error(Errc::NotSemisimple, "census needs a semisimple algebra; vanishing: " + names);
  }
  rep.census_applicable = true;
  const std::size_t n = xs.size();

  if (mode == CensusMode::combinatorial) {
    static const std::size_t mult[] = {0, 1, 1, 1, 2, 5};
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t cnt = binom(n, k) * mult[k];
      rep.dimension_counts.emplace_back(static_cast<int>(k), cnt);
      rep.sum_of_squares += cnt * k * k;
    }
    if (n == 5) {
      rep.dimension_counts.emplace_back(6, 5);
      rep.sum_of_squares += 5 * 36;
    }
    rep.census_ok = rep.sum_of_squares == rep.algebra_dim;
    return rep;
  }

  IrrepEnumeration en = enumerate_irreps(xs, hints);
  rep.deferred = en.deferred;
  if (!en.deferred.empty()) {
    std::string need;
    for (const auto& d : en.deferred)
      need += (need.empty() ? "" : "; ") + std::string("subset (") + join(d.subset) + ") needs " + d.required_modulus +
              " (" + std::to_string(d.found) + " of " + std::to_string(d.expected) + " roots found)";
    throw Error(Errc::RootsUnavailable, "constructive census needs roots outside the context: " + need);
  }

  const auto probes = default_probe_words();
  std::vector<BraidWord> extended = words_of_length(3);
  for (auto& w : words_of_length(4)) extended.push_back(std::move(w));

  std::vector<std::size_t> class_rep;  // entry index representing each class
  std::map<std::size_t, std::vector<FieldElement>> extended_cache;
  auto ext = [&](std::size_t i) -> const std::vector<FieldElement>& {
    auto it = extended_cache.find(i);
    if (it == extended_cache.end()) it = extended_cache.emplace(i, character(en.reps[i].rep, extended)).first;
    return it->second;
  };

  for (std::size_t i = 0; i < en.reps.size(); ++i) {
    const auto& e = en.reps[i];
    CensusEntry ce{e.label, e.rep.dim(), character(e.rep, probes), 0};
    std::optional<std::size_t> match;
    for (std::size_t c = 0; c < class_rep.size() && !match; ++c) {
      const auto& other = rep.entries[class_rep[c]];
      if (other.dim != ce.dim || other.probe != ce.probe) continue;
      if (ext(class_rep[c]) != ext(i)) continue;
      ++rep.intertwiner_solves;
      if (intertwiner_exists(en.reps[class_rep[c]].rep, e.rep)) match = c;
    }
    if (match) {
      ce.class_id = *match;
    } else {
      ce.class_id = class_rep.size();
      class_rep.push_back(i);
    }
    rep.entries.push_back(std::move(ce));
  }

  std::map<int, std::size_t> counts;
  for (auto idx : class_rep) {
    int d = rep.entries[idx].dim;
    ++counts[d];
    rep.sum_of_squares += static_cast<std::size_t>(d * d);
  }
  rep.dimension_counts.assign(counts.begin(), counts.end());
  rep.pairwise_inequivalent = class_rep.size() == rep.entries.size();
  rep.census_ok = rep.pairwise_inequivalent && rep.sum_of_squares == rep.algebra_dim;
  return rep;
}

std::vector<VariantAttribution> attribute_dim6(const ParameterSet& xs) {
  if (xs.size() != 5) throw Error(Errc::BadSpec, "dimension 6 needs |X| = 5");
  std::vector<VariantAttribution> out;
  for (int i = 1; i <= 5; ++i) {
    Representation r = build_rep(RepSpec{6, xs, {}, i});
    VariantAttribution va{i, irreducible_oracle(r), std::nullopt};
    if (!va.irreducible) va.witness = invariant_subspace_witness(r);
    out.push_back(std::move(va));
  }
  return out;
}

}  // namespace b3q
