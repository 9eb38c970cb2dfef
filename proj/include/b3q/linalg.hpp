#pragma once

// Exact dense linear algebra over a FieldContext.

#include <cstddef>
#include <optional>
#include <vector>

#include "b3q/field.hpp"
#include "b3q/polynomial.hpp"

namespace b3q {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  Matrix(ContextPtr ctx, std::size_t rows, std::size_t cols);
  Matrix(ContextPtr ctx, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  static Matrix zero(const ContextPtr& ctx, std::size_t rows, std::size_t cols) { return Matrix(ctx, rows, cols); }
  static Matrix identity(const ContextPtr& ctx, std::size_t n);
  static Matrix diagonal(const ContextPtr& ctx, const std::vector<FieldElement>& diag);
  static Matrix from_rationals(const ContextPtr& ctx, const std::vector<std::vector<Rational>>& rows);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<FieldElement>& entries() const noexcept { return e_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator*(Matrix a, const FieldElement& s);
  friend Matrix operator*(const FieldElement& s, Matrix a) { return std::move(a) * s; }
  Matrix operator-() const;

  Matrix transpose() const;
  FieldElement trace() const;
  bool is_zero() const noexcept;
  /// Returns the scalar when the matrix is c·Id.
  std::optional<FieldElement> scalar_value() const;
  /// Nonnegative powers only; see inverse() for the rest.
  Matrix pow(unsigned n) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  ContextPtr ctx_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> e_;
};

struct DetInverse {
  FieldElement det;
  std::optional<Matrix> inverse;
};

/// Determinant by fraction-free (Bareiss) elimination, inverse by Gauss-Jordan.
DetInverse det_and_inverse(const Matrix& m);
FieldElement determinant(const Matrix& m);
/// Throws NotInvertible on singular input.
Matrix inverse(const Matrix& m);

/// Monic characteristic polynomial det(λI - M) via Faddeev-LeVerrier.
Polynomial charpoly(const Matrix& m);
/// Monic minimal polynomial: lcm of the Krylov annihilators of the standard basis.
Polynomial minpoly(const Matrix& m);
/// p(M) by Horner.
Matrix evaluate(const Polynomial& p, const Matrix& m);

std::size_t rank(const Matrix& m);
/// Basis of the right null space; one vector per free column of the RREF.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Row echelon accumulator over vectors of a fixed length. Rows are kept
/// normalised with a unit pivot; insertion reduces the candidate first.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  /// Reduces v against the basis; adds it and returns true if independent.
  bool insert(Vector v);
  bool contains(Vector v) const;
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  void reduce(Vector& v) const;

  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

struct AlgebraClosure {
  std::size_t dimension = 0;
  std::vector<Matrix> basis;
  /// Dimension after each breadth-first round (word length 0, 1, 2, ...).
  std::vector<std::size_t> growth;
};

/// Unital algebra spanned by all words in the generators; identity included.
AlgebraClosure algebra_closure(const std::vector<Matrix>& generators);
std::size_t algebra_closure_dim(const std::vector<Matrix>& generators);

/// dim {M : M G = G M for every generator G}.
std::size_t commutant_dim(const std::vector<Matrix>& generators);

/// Basis of {M : M·A_k = B_k·M for all k}, returned as matrices.
std::vector<Matrix> intertwiners(const std::vector<Matrix>& from, const std::vector<Matrix>& to);

}  // namespace b3q
