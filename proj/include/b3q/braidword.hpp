#pragma once

// Words in g1, g2 and the derived generators a = g1 g2, b = g1 g2 g1,
// c = (g1 g2)^3.
//
// Surface grammar:
//   word    := term {term}
//   term    := atom ['^' integer]
//   atom    := 's1' | 's2' | 'a' | 'b' | 'c' | '(' word ')'
//   integer := ['-'] digits          (nonzero)
// Blank input denotes the empty word (the identity).

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "b3q/linalg.hpp"
#include "b3q/reps.hpp"

namespace b3q {

enum class Generator { g1, g2, a, b, c };

struct Factor {
  Generator gen;
  std::int64_t exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct BraidWord {
  std::vector<Factor> factors;

  bool empty() const noexcept { return factors.empty(); }
  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& x, const BraidWord& y);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Throws Errc::SyntaxError; the message carries the 0-based offset.
BraidWord parse_word(std::string_view text);
/// Canonical spelling accepted by parse_word, e.g. "s1^2 s2^-1 b".
std::string to_string(const BraidWord& w);

/// Merge adjacent equal generators and drop zero exponents.
BraidWord free_reduce(const BraidWord& w);

/// Caches g1, g2, their inverses and the macro matrices of one representation.
class WordEvaluator {
 public:
  explicit WordEvaluator(const Representation& rep);
  Matrix operator()(const BraidWord& w) const;

 private:
  const Matrix& base(Generator g) const;
  const Matrix& base_inverse(Generator g) const;

  std::vector<Matrix> gens_;
  std::vector<Matrix> invs_;
};

Matrix evaluate(const BraidWord& w, const Representation& rep);

}  // namespace b3q
