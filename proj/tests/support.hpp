#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "b3q/analysis.hpp"
#include "b3q/json_io.hpp"
#include "b3q/spectral.hpp"

namespace test {

using namespace b3q;

inline ContextPtr Q() { return FieldContext::rationals(); }
inline ContextPtr Z5() { return FieldContext::cyclotomic5(); }

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline ParameterSet X(const ContextPtr& ctx, const std::vector<Rational>& v) {
  return ParameterSet::from_rationals(ctx, v);
}

inline FieldElement el(const ContextPtr& ctx, const Rational& r) { return FieldElement(ctx, r); }

inline Representation rep(int dim, const ParameterSet& xs, RootChoice rc = {}, int variant = 5) {
  return build_rep(RepSpec{dim, xs, std::move(rc), variant});
}

inline RootChoice with_h(const FieldElement& h) { return RootChoice{h, std::nullopt}; }
inline RootChoice with_f(const FieldElement& f) { return RootChoice{std::nullopt, f}; }

inline Json load_json(const std::string& name) {
  std::ifstream in(std::string(B3Q_TEST_DATA) + "/" + name);
  return Json::parse(in);
}

struct Compositum {
  ContextPtr ctx;
  ParameterSet xs;
  RootHints hints;
};

// X = {1,2,3,4,4/3} in Q(ζ5, √2, √3), where every e4 of a 4-subset is a square.
inline Compositum compositum_fixture() {
  Json j = load_json("compositum_census.json");
  ContextPtr ctx = parse_context(j["context"]);
  std::vector<FieldElement> xs;
  for (const auto& v : j["X"]) xs.push_back(element_from_json(ctx, v));
  RootHints h;
  for (const auto& v : j["hints"]) h.elements.push_back(element_from_json(ctx, v));
  return {ctx, ParameterSet(ctx, std::move(xs)), std::move(h)};
}

/// Random nonzero rationals with small numerators and denominators.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
    long n = 0;
    while (n == 0) n = num(rng_);
    Rational r(n, den(rng_));
    r.canonicalize();
    return r;
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// n distinct nonzero rationals; for n = 4 e4 is a rational square, for n = 5
/// e5 is a rational fifth power. Retried until the semisimplicity verdict holds,
/// so every representation built on them is generic.
inline std::vector<Rational> generic_set(RationalSource& src, std::size_t n) {
  for (;;) {
    std::vector<Rational> v;
    while (v.size() + (n >= 4 ? 1 : 0) < n) {
      Rational r = src.next();
      if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
    }
    if (n >= 4) {
      Rational prod = 1;
      for (const auto& r : v) prod *= r;
      Rational s = src.next();
      Rational last = n == 4 ? Rational(s * s / prod) : Rational(s * s * s * s * s / prod);
      last.canonicalize();
      if (std::find(v.begin(), v.end(), last) != v.end()) continue;
      v.push_back(last);
    }
    if (semisimplicity(X(Q(), v)).semisimple_verdict) return v;
  }
}

/// Every representation over Q attached to exactly the full set (both h for
/// n = 4, the rational f for n = 5) or the five variants for dim 6.
inline std::vector<Representation> reps_for_class(const ContextPtr& ctx, const std::vector<Rational>& v, int dim) {
  ParameterSet xs = X(ctx, v);
  std::vector<Representation> out;
  if (dim <= 3) {
    out.push_back(rep(dim, xs));
  } else if (dim == 4) {
    for (const auto& h : find_kth_roots(elementary_symmetric(xs, 4), 2)) out.push_back(rep(4, xs, with_h(h)));
  } else if (dim == 5) {
    for (const auto& f : find_kth_roots(elementary_symmetric(xs, 5), 5)) out.push_back(rep(5, xs, with_f(f)));
  } else {
    for (int i = 1; i <= 5; ++i) out.push_back(rep(6, xs, {}, i));
  }
  return out;
}

}  // namespace test
