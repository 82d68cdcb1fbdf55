#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "milnor/exactla/rational.hpp"
#include "milnor/exactla/sparse.hpp"

namespace milnor::exactla {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// Columns given as vectors of equal length `rows`.
  static RationalMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  SparseVec sparse_column(std::size_t c) const;

  Vector apply(const Vector& x) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix transpose() const;
  /// Horizontal concatenation [this | other].
  RationalMatrix hconcat(const RationalMatrix& other) const;

  bool operator==(const RationalMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Subspace of Q^ambient_dim spanned by linearly independent basis columns.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim);
  /// Takes the span of the given columns; dependent columns are dropped.
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.cols(); }
  const RationalMatrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.column(i); }

 private:
  std::size_t ambient_dim_;
  RationalMatrix basis_;
};

/// Reduced row echelon form; pivots are the first nonzero entries in column order.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}. For each non-pivot column j the basis vector has a
/// 1 at j and expresses column j through the pivot columns before it.
Subspace kernel_basis(const RationalMatrix& m);

/// Some x with m x = b, or std::nullopt when b is outside the column space.
std::optional<Vector> solve(const RationalMatrix& m, const Vector& b);

bool membership(const Vector& v, const Subspace& s);

/// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Sum (span of the union) of two subspaces.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

}  // namespace milnor::exactla
