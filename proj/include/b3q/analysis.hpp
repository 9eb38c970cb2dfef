#pragma once

// Irreducibility and semisimplicity: the closed-form vanishing predicates,
// the Burnside-closure oracle, invariant-subspace witnesses, decomposability,
// character probes and the sum-of-squares census.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "b3q/braidword.hpp"
#include "b3q/reps.hpp"

namespace b3q {

enum class PredicateFamily { I2, I3, I4, J4, I5, J5, I6, J6, K6 };

std::string family_name(PredicateFamily f);

struct PredicateValue {
  PredicateFamily family;
  /// 1-based indices into the parameter list the predicate was evaluated on.
  std::vector<std::size_t> indices;
  /// For I4 on a 4-element subset of a 5-element X: the subset whose e4 fixes h.
  std::vector<std::size_t> root_subset;
  FieldElement value;
  /// value is Res_t(t^k - e_k, P(t)) rather than P at a specific root.
  bool resultant = false;

  bool is_zero() const { return value.is_zero(); }
  /// e.g. "I3(1,2,3)", "J6(1,5)", "I4(2)[1,2,3,4]".
  std::string name() const;
};

/// All predicates of one class on X with |X| = level (level 6 uses |X| = 5).
/// I4/J4 and I5/J5 quantify over every admissible root through resultants.
std::vector<PredicateValue> evaluate_predicates(const ParameterSet& xs, int level);

/// Predicates governing one constructed representation, evaluated at its own
/// root h or f. For dimension 6 this is the I6/J6/K6 family on X.
std::vector<PredicateValue> rep_predicates(const Representation& rep);

/// True iff the representation's predicates are all nonzero.
bool predicted_irreducible(const Representation& rep);

/// Burnside: the generated matrix algebra is all of End(V).
bool irreducible_oracle(const Representation& rep);

struct Witness {
  /// 1-based coordinates of the g1-eigenbasis included in the subspace.
  std::vector<std::size_t> index_set;
  /// Optional line (α, β) inside the repeated-eigenvalue plane of g1.
  std::optional<std::pair<FieldElement, FieldElement>> line;
  bool complement_found = false;

  std::size_t dimension() const noexcept { return index_set.size() + (line ? 1 : 0); }
};

std::vector<Vector> witness_basis(const Representation& rep, const Witness& w);
/// Exact check that the spanned subspace is invariant under g1 and g2.
bool verify_witness(const Representation& rep, const Witness& w);

/// Smallest invariant proper subspace found by the structured search.
std::optional<Witness> invariant_subspace_witness(const Representation& rep);
/// Every candidate of the structured search that is invariant.
std::vector<Witness> all_witnesses(const Representation& rep);

/// True iff an invariant complement to w exists among the search candidates.
/// Throws InvalidWitness if w is not invariant.
bool decomposability_check(const Representation& rep, const Witness& w);

/// g1, g2, g1 g2, g1 g2 g1, g1^2 g2, g1^3 g2.
std::vector<BraidWord> default_probe_words();
/// All words in s1^{±1}, s2^{±1} of the given length, in lexicographic order.
std::vector<BraidWord> words_of_length(std::size_t length);
std::vector<FieldElement> character(const Representation& rep, const std::vector<BraidWord>& words);

/// True iff a nonzero M with M ρ1(g) = ρ2(g) M exists.
bool intertwiner_exists(const Representation& lhs, const Representation& rhs);

struct CensusEntry {
  std::string label;
  int dim = 0;
  std::vector<FieldElement> probe;
  std::size_t class_id = 0;
};

enum class CensusMode { constructive, combinatorial };

struct CensusReport {
  std::size_t parameter_count = 0;
  bool semisimple_verdict = false;
  std::vector<PredicateValue> failing_predicates;
  std::size_t predicates_checked = 0;

  bool census_applicable = false;
  CensusMode mode = CensusMode::combinatorial;
  std::vector<CensusEntry> entries;
  /// dim -> number of inequivalent representations
  std::vector<std::pair<int, std::size_t>> dimension_counts;
  std::size_t sum_of_squares = 0;
  std::size_t algebra_dim = 0;
  bool pairwise_inequivalent = false;
  std::size_t intertwiner_solves = 0;
  std::vector<DeferredRoots> deferred;
  bool census_ok = false;
};

/// 1, 6, 24, 96, 600 for |X| = 1..5.
std::size_t algebra_dimension(std::size_t n);

/// Verdict part only: every predicate family required for |X|.
CensusReport semisimplicity(const ParameterSet& xs);

/// Verdict plus the census. Throws NotSemisimple when the verdict is false and
/// RootsUnavailable for a constructive census with deferred roots.
CensusReport dimension_census(const ParameterSet& xs, CensusMode mode, const RootHints& hints = {});

struct VariantAttribution {
  int variant = 0;
  bool irreducible = false;
  std::optional<Witness> witness;
};

/// Oracle verdict and witness for each six-dimensional variant.
std::vector<VariantAttribution> attribute_dim6(const ParameterSet& xs);

}  // namespace b3q
