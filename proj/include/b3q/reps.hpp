#pragma once

// Matrix representations of the quotients Q_X of the 3-string braid group
// algebra in the eigenbasis of g1: dimensions 1..5 on |X| = d, and the five
// six-dimensional representations on |X| = 5.

#include <optional>
#include <string>
#include <vector>

#include "b3q/field.hpp"
#include "b3q/linalg.hpp"

namespace b3q {

/// Ordered eigenvalue list x1..xn: pairwise distinct, nonzero, 1 <= n <= 5.
class ParameterSet {
 public:
  ParameterSet(ContextPtr ctx, std::vector<FieldElement> values);
  static ParameterSet from_rationals(const ContextPtr& ctx, const std::vector<Rational>& values);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<FieldElement>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  /// 1-based access, matching the x_i naming.
  const FieldElement& x(std::size_t i) const;

  /// Elements at the given 1-based indices, in the order given.
  ParameterSet subset(const std::vector<std::size_t>& indices) const;
  ParameterSet without(std::size_t i) const;

 private:
  ContextPtr ctx_;
  std::vector<FieldElement> values_;
};

/// e_k(X); e_0 = 1.
FieldElement elementary_symmetric(const std::vector<FieldElement>& xs, std::size_t k);
FieldElement elementary_symmetric(const ParameterSet& xs, std::size_t k);
/// Δ_i(X) = ∏_{j≠i} (x_j - x_i), 1-based i.
FieldElement delta(const std::vector<FieldElement>& xs, std::size_t i);
FieldElement delta(const ParameterSet& xs, std::size_t i);

/// Swaps the 1-based positions i and j.
std::vector<FieldElement> transposed(std::vector<FieldElement> xs, std::size_t i, std::size_t j);

struct RootChoice {
  std::optional<FieldElement> h;  ///< h^2 = e4(X), dimension 4
  std::optional<FieldElement> f;  ///< f^5 = e5(X), dimension 5
};

struct RepSpec {
  int dim = 1;
  ParameterSet params;
  RootChoice roots;
  /// Dimension 6 only: index i selecting C = -x_i e5(X).
  int variant = 5;

  /// Throws BadSpec / MissingRoot when the invariants fail.
  void validate() const;
};

struct Representation {
  RepSpec spec;
  Matrix g1;
  Matrix g2;
  /// Multiplicity of each x_i in the spectrum of g1, in parameter order.
  std::vector<int> multiplicities;

  int dim() const noexcept { return spec.dim; }
  const ContextPtr& context() const noexcept { return g1.context(); }
};

/// P_X(λ) = ∏ (λ - x_i).
Polynomial parameter_polynomial(const ParameterSet& xs);

/// Builds g1, g2 and runs the braid-relation / minimal-polynomial self-check.
Representation build_rep(const RepSpec& spec);

/// Exact g1 g2 g1 == g2 g1 g2.
bool verify_braid_relation(const Representation& rep);
/// P_X(g2) == 0 and minpoly(g2) == P_X; the same for g1.
bool verify_minimal_polynomial(const Representation& rep);

/// σ_ij ∘ rep: swap x_i, x_j in the parameter list and rebuild.
Representation transpose_parameters(const Representation& rep, std::size_t i, std::size_t j);

namespace table {

// Helper quantities of the closed-form constructions. Indices are 1-based
// and every function takes the full parameter vector, so the transposition
// rule σ_ij∘f is simply f(transposed(xs, i, j)).

FieldElement alpha(const std::vector<FieldElement>& xs, const FieldElement& h, std::size_t i);
FieldElement beta(const std::vector<FieldElement>& xs, const FieldElement& h, std::size_t i);
/// γ_a for a ∈ {2,3,4}.
FieldElement gamma(const std::vector<FieldElement>& xs, const FieldElement& h, std::size_t a);

FieldElement m_diag(const std::vector<FieldElement>& xs, const FieldElement& f, std::size_t i);
FieldElement m_offdiag(const std::vector<FieldElement>& xs, const FieldElement& f, std::size_t i, std::size_t j);

/// q_a = x1 x_a + x_b x_c, a ∈ {2,3,4}.
FieldElement q(const std::vector<FieldElement>& xs, std::size_t a);
/// p_i = e5 - x_i^3 x5^2.
FieldElement p(const std::vector<FieldElement>& xs, std::size_t i);
FieldElement r(const std::vector<FieldElement>& xs);
FieldElement u(const std::vector<FieldElement>& xs);
FieldElement v(const std::vector<FieldElement>& xs);
FieldElement w(const std::vector<FieldElement>& xs);
FieldElement z(const std::vector<FieldElement>& xs);

}  // namespace table

// ---------------------------------------------------------------------------
// Root discovery and enumeration

/// Extra elements of the context that root discovery may use: square roots,
/// roots of unity and the like. The generator θ is always tried.
struct RootHints {
  std::vector<FieldElement> elements;
};

/// Distinct k-th roots of a found in the context: rational roots, roots
/// built from a hint s with s^k rational, and their products with the
/// k-th roots of unity visible among ±s^j.
std::vector<FieldElement> find_kth_roots(const FieldElement& a, unsigned k, const RootHints& hints = {});

/// f0 ζ5^k for k = 0..4 in the context Q(ζ5).
std::vector<FieldElement> fifth_roots_via_zeta5(const Rational& f0, const ContextPtr& zeta5_ctx);

struct IrrepEntry {
  std::vector<std::size_t> subset;  ///< 1-based indices into the full X
  Representation rep;
  std::string label;
};

struct DeferredRoots {
  std::vector<std::size_t> subset;
  int dim = 0;
  std::string required_modulus;
  std::size_t found = 0;
  std::size_t expected = 0;
};

struct IrrepEnumeration {
  std::vector<IrrepEntry> reps;
  std::vector<DeferredRoots> deferred;
};

/// Every representation attached to a nonempty subset of X (lexicographic
/// subsets, h = +root before -root, f in discovery order, dimension 6 by i).
IrrepEnumeration enumerate_irreps(const ParameterSet& xs, const RootHints& hints = {});

std::string rep_label(const Representation& rep, const std::vector<std::size_t>& subset);

}  // namespace b3q
