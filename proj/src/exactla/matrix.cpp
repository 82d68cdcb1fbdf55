#include "milnor/exactla/matrix.hpp"

#include <sstream>

#include "milnor/errors.hpp"

namespace milnor::exactla {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (const auto& v : r) entries_.push_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector RationalMatrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

SparseVec RationalMatrix::sparse_column(std::size_t c) const {
  SparseVec v;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!is_zero((*this)(r, c))) v.push_back({r, (*this)(r, c)});
  return v;
}

Vector RationalMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_zero(x[c])) y[r] += (*this)(r, c) * x[c];
  return y;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& other) const {
  if (rows_ != other.rows_) throw InputError("hconcat row mismatch");
  RationalMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << exactla::to_string((*this)(r, c));
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(ambient_dim, 0) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_dim_(ambient_dim) {
  SparseEchelon ech(ambient_dim);
  std::vector<Vector> kept;
  for (const auto& v : spanning) {
    if (v.size() != ambient_dim) throw InputError("spanning vector has wrong dimension");
    if (!ech.insert(sparse_from_dense(v))) kept.push_back(v);
  }
  basis_ = RationalMatrix::from_columns(ambient_dim, kept);
}

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivot_cols) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead_row, j));
    Rational inv = 1 / a(lead_row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || is_zero(a(r, c))) continue;
      Rational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!is_zero(a(lead_row, j))) a(r, j) -= f * a(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return a;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

Subspace kernel_basis(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  RationalMatrix r = rref(m, &pivots);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vector v(m.cols());
    v[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, j);
    basis.push_back(std::move(v));
  }
  return Subspace(m.cols(), basis);
}

std::optional<Vector> solve(const RationalMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong dimension");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> pivots;
  RationalMatrix red = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

bool membership(const Vector& v, const Subspace& s) {
  if (v.size() != s.ambient_dim()) throw InputError("membership: dimension mismatch");
  return solve(s.basis(), v).has_value();
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace_sum: ambient mismatch");
  std::vector<Vector> span;
  for (std::size_t i = 0; i < a.dim(); ++i) span.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) span.push_back(b.basis_vector(i));
  return Subspace(a.ambient_dim(), span);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersect: ambient mismatch");
  // [A | -B] (x, y) = 0  =>  A x lies in both spans
  RationalMatrix stacked = a.basis().hconcat(b.basis());
  for (std::size_t r = 0; r < stacked.rows(); ++r)
    for (std::size_t c = a.dim(); c < stacked.cols(); ++c) stacked(r, c) = -stacked(r, c);
  Subspace k = kernel_basis(stacked);
  std::vector<Vector> span;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vector coeffs = k.basis_vector(i);
    coeffs.resize(a.dim());
    span.push_back(a.basis().apply(coeffs));
  }
  return Subspace(a.ambient_dim(), span);
}

}  // namespace milnor::exactla
