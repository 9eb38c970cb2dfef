#pragma once

// Central character and spectra of a = g1 g2, b = g1 g2 g1 on a constructed
// representation, compared against their closed forms. Roots of unity and
// fractional powers never appear: every expected spectrum is expanded into a
// characteristic polynomial over the working field.

#include <string>
#include <utility>
#include <vector>

#include "b3q/reps.hpp"

namespace b3q {

struct SpectralCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct SpectralReport {
  FieldElement c_rho;
  FieldElement c_expected;
  FieldElement tr_a, tr_a2, tr_b;
  FieldElement tr_a_expected, tr_a2_expected, tr_b_expected;
  Polynomial charpoly_a, charpoly_b;
  Polynomial charpoly_a_expected, charpoly_b_expected;
  bool det_constraint_ok = false;
  std::vector<SpectralCheck> checks;
  bool all_ok = false;
};

/// Scalar value of (g1 g2)^3; also requires (g1 g2 g1)^2 to be the same scalar matrix.
FieldElement central_value(const Representation& rep);

/// -e2^3, e3^2, h^3, f^6, -x_i e5 for dimensions 2..6; x1^6 for dimension 1.
FieldElement expected_central(const RepSpec& spec);

struct TraceTriple {
  FieldElement tr_a, tr_a2, tr_b;
};
TraceTriple expected_traces(const RepSpec& spec);

/// (χ_A, χ_B) with the expected multiplicities.
std::pair<Polynomial, Polynomial> expected_charpolys(const RepSpec& spec);

/// (∏ x_i^{m_i})^6 == C^d.
bool check_det_constraint(const Representation& rep);

/// Full comparison; never throws for a valid representation.
SpectralReport check_spectrum(const Representation& rep);

}  // namespace b3q
