#include "b3q/linalg.hpp"

#include <deque>

namespace b3q {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) throw Error(Errc::NotSquare, std::string(what) + " needs a square matrix");
}

}  // namespace

Matrix::Matrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, FieldElement(ctx_, 0L)) {}

Matrix::Matrix(ContextPtr ctx, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw Error(Errc::ShapeMismatch, "entry count does not match the shape");
  for (const auto& x : e_) require_same_context(ctx_, x.context());
}

Matrix Matrix::identity(const ContextPtr& ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(ctx, 1L);
  return m;
}

Matrix Matrix::diagonal(const ContextPtr& ctx, const std::vector<FieldElement>& diag) {
  Matrix m(ctx, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    require_same_context(ctx, diag[i].context());
    m(i, i) = diag[i];
  }
  return m;
}

Matrix Matrix::from_rationals(const ContextPtr& ctx, const std::vector<std::vector<Rational>>& rows) {
  std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  Matrix m(ctx, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(Errc::ShapeMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = FieldElement(ctx, rows[i][j]);
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "matrix sum");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "matrix difference");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "matrix product");
  require_same_context(a.ctx_, b.ctx_);
  Matrix r(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(Errc::ShapeMismatch, "matrix-vector product");
  Vector r(a.rows_, FieldElement(a.ctx_, 0L));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

Matrix operator*(Matrix a, const FieldElement& s) {
  for (auto& x : a.e_) x *= s;
  return a;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FieldElement Matrix::trace() const {
  require_square(*this, "trace");
  FieldElement t(ctx_, 0L);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const noexcept {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<FieldElement> Matrix::scalar_value() const {
  if (!is_square() || rows_ == 0) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j) {
        if ((*this)(i, i) != (*this)(0, 0)) return std::nullopt;
      } else if (!(*this)(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  return (*this)(0, 0);
}

Matrix Matrix::pow(unsigned n) const {
  require_square(*this, "pow");
  Matrix result = identity(ctx_, rows_), base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  require_same_context(a.ctx_, b.ctx_);
  return a.e_ == b.e_;
}

// ---------------------------------------------------------------------------

FieldElement determinant(const Matrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  const auto& ctx = m.context();
  if (n == 0) return FieldElement(ctx, 1L);
  Matrix a = m;
  FieldElement prev(ctx, 1L);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return FieldElement(ctx, 0L);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    FieldElement prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) * prev_inv;
      a(i, k) = FieldElement(ctx, 0L);
    }
    prev = a(k, k);
  }
  FieldElement d = a(n - 1, n - 1);
  return negate ? -d : d;
}

DetInverse det_and_inverse(const Matrix& m) {
  FieldElement d = determinant(m);
  if (d.is_zero()) return {d, std::nullopt};
  return {d, inverse(m)};
}

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  const auto& ctx = m.context();
  Matrix a = m, inv = Matrix::identity(ctx, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) throw Error(Errc::NotInvertible, "singular matrix");
    if (p != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    FieldElement piv_inv = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= piv_inv;
      inv(col, j) *= piv_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      FieldElement f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Polynomial charpoly(const Matrix& m) {
  require_square(m, "charpoly");
  const std::size_t n = m.rows();
  const auto& ctx = m.context();
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  std::vector<FieldElement> c(n + 1, FieldElement(ctx, 0L));
  c[n] = FieldElement(ctx, 1L);
  Matrix mk = Matrix::zero(ctx, n, n);
  const Matrix id = Matrix::identity(ctx, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -(m * mk).trace() * Rational(1, static_cast<long>(k));
  }
  return Polynomial(ctx, std::move(c));
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  require_square(m, "polynomial evaluation");
  const auto& ctx = m.context();
  Matrix acc = Matrix::zero(ctx, m.rows(), m.cols());
  const Matrix id = Matrix::identity(ctx, m.rows());
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * m + id * p.coeffs()[k];
  return acc;
}

Polynomial minpoly(const Matrix& m) {
  require_square(m, "minpoly");
  const std::size_t n = m.rows();
  const auto& ctx = m.context();
  Polynomial result = Polynomial::constant(FieldElement(ctx, 1L));
  for (std::size_t j = 0; j < n; ++j) {
    // Krylov sequence e_j, M e_j, ... until the first dependency; the
    // dependency coefficients give the local annihilator.
    std::vector<Vector> krylov;
    Vector v(n, FieldElement(ctx, 0L));
    v[j] = FieldElement(ctx, 1L);
    for (;;) {
      krylov.push_back(v);
      Matrix sys(ctx, n, krylov.size());
      for (std::size_t c = 0; c < krylov.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) sys(r, c) = krylov[c][r];
      auto ker = kernel_basis(sys);
      if (!ker.empty()) {
        // the last column is the pivot-free one: a unique relation ending in 1
        Polynomial ann(ctx, ker.front());
        result = lcm(result, ann.monic());
        break;
      }
      v = m * v;
    }
  }
  return result;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    FieldElement inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      FieldElement f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return rref(a).size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix a = m;
  auto pivots = rref(a);
  const auto& ctx = m.context();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), FieldElement(ctx, 0L));
    v[free] = FieldElement(ctx, 1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------

void EchelonBasis::reduce(Vector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    FieldElement f = v[p];
    const Vector& row = rows_[r];
    for (std::size_t j = p; j < length_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
}

bool EchelonBasis::insert(Vector v) {
  if (v.size() != length_) throw Error(Errc::ShapeMismatch, "echelon vector length");
  reduce(v);
  std::size_t p = 0;
  while (p < length_ && v[p].is_zero()) ++p;
  if (p == length_) return false;
  FieldElement inv = v[p].inverse();
  for (std::size_t j = p; j < length_; ++j) v[j] *= inv;
  // keep earlier rows reduced at the new pivot so reduce() stays single-pass
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    FieldElement f = row[p];
    for (std::size_t j = p; j < length_; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(Vector v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

AlgebraClosure algebra_closure(const std::vector<Matrix>& generators) {
  if (generators.empty()) throw Error(Errc::ShapeMismatch, "closure needs at least one generator");
  const std::size_t d = generators.front().rows();
  const auto& ctx = generators.front().context();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != d) throw Error(Errc::ShapeMismatch, "generators must share one square size");
    require_same_context(ctx, g.context());
  }
  AlgebraClosure out;
  EchelonBasis echelon(d * d);
  std::deque<std::size_t> frontier;
  auto offer = [&](const Matrix& m) {
    if (echelon.insert(m.entries())) {
      out.basis.push_back(m);
      frontier.push_back(out.basis.size() - 1);
    }
  };
  offer(Matrix::identity(ctx, d));
  out.growth.push_back(echelon.size());
  for (const auto& g : generators) offer(g);
  out.growth.push_back(echelon.size());
  // breadth-first by word length: extend every new element on the right
  std::size_t round_end = out.basis.size();
  std::size_t next = 1;  // identity times generators is already seeded
  while (next < out.basis.size() && echelon.size() < d * d) {
    for (const auto& g : generators) offer(out.basis[next] * g);
    ++next;
    if (next == round_end) {
      out.growth.push_back(echelon.size());
      round_end = out.basis.size();
    }
  }
  if (out.growth.back() != echelon.size()) out.growth.push_back(echelon.size());
  out.dimension = echelon.size();
  return out;
}

std::size_t algebra_closure_dim(const std::vector<Matrix>& generators) { return algebra_closure(generators).dimension; }

std::vector<Matrix> intertwiners(const std::vector<Matrix>& from, const std::vector<Matrix>& to) {
  if (from.size() != to.size() || from.empty()) throw Error(Errc::ShapeMismatch, "intertwiner needs paired generators");
  const std::size_t n1 = from.front().rows(), n2 = to.front().rows();
  const auto& ctx = from.front().context();
  const std::size_t unknowns = n2 * n1;
  Matrix sys(ctx, from.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < from.size(); ++k) {
    const Matrix& a = from[k];
    const Matrix& b = to[k];
    if (a.rows() != n1 || !a.is_square() || b.rows() != n2 || !b.is_square())
      throw Error(Errc::ShapeMismatch, "intertwiner generator shapes");
    // (M A - B M)_{ij} = Σ_l M_{il} A_{lj} - Σ_l B_{il} M_{lj}
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n1; ++j, ++row) {
        for (std::size_t l = 0; l < n1; ++l) sys(row, i * n1 + l) += a(l, j);
        for (std::size_t l = 0; l < n2; ++l) sys(row, l * n1 + j) -= b(i, l);
      }
  }
  std::vector<Matrix> out;
  for (auto& v : kernel_basis(sys)) out.emplace_back(ctx, n2, n1, std::move(v));
  return out;
}

std::size_t commutant_dim(const std::vector<Matrix>& generators) { return intertwiners(generators, generators).size(); }

}  // namespace b3q
