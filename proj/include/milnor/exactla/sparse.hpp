#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "milnor/exactla/rational.hpp"

namespace milnor::exactla {

struct SparseEntry {
  std::size_t index;
  Rational value;
  bool operator==(const SparseEntry& o) const { return index == o.index && value == o.value; }
};

/// Sorted by index, no stored zeros.
using SparseVec = std::vector<SparseEntry>;

SparseVec sparse_unit(std::size_t index, const Rational& value = 1);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& b_scale = 1);
SparseVec sparse_scale(const SparseVec& a, const Rational& s);
SparseVec sparse_from_dense(const std::vector<Rational>& dense);
std::vector<Rational> sparse_to_dense(const SparseVec& v, std::size_t dim);
bool sparse_is_valid(const SparseVec& v, std::size_t dim);

/// Accumulates a linear combination of sparse vectors into a dense buffer and
/// hands back the sparse result. Reusable; `take` resets the buffer.
class DenseAccumulator {
 public:
  explicit DenseAccumulator(std::size_t dim = 0);
  void resize(std::size_t dim);
  std::size_t dim() const { return values_.size(); }

  void add(const SparseVec& v, const Rational& scale);
  void add_entry(std::size_t index, const Rational& value);
  Rational& at(std::size_t index);
  const Rational& peek(std::size_t index) const { return values_[index]; }
  SparseVec take();
  void clear();

 private:
  void touch(std::size_t index);

  std::vector<Rational> values_;
  std::vector<char> touched_flag_;
  std::vector<std::size_t> touched_;
  Rational scratch_;
};

/// Incremental row-echelon basis of a subspace of Q^ambient.
///
/// Rows are kept with leading coefficient 1; the pivot of a row is its lowest
/// nonzero index, so pivoting is deterministic in the canonical column order.
/// Each row may carry a tag: a vector in a separate "label" space that records
/// how the row was built from inserted vectors. Reducing a vector then also
/// yields the matching combination of tags (used for preimages and kernels).
class SparseEchelon {
 public:
  /// eager: every row stores its combined tag. deferred: rows store only the
  /// reduction steps that built them and tags are rebuilt on demand, which
  /// avoids tag fill-in when few tag queries are made.
  enum class TagMode { eager, deferred };

  explicit SparseEchelon(std::size_t ambient, std::size_t tag_dim = 0, TagMode mode = TagMode::eager);

  SparseEchelon(const SparseEchelon& other);
  SparseEchelon& operator=(const SparseEchelon& other);
  SparseEchelon(SparseEchelon&&) noexcept;
  SparseEchelon& operator=(SparseEchelon&&) noexcept;
  ~SparseEchelon();

  std::size_t ambient() const { return ambient_; }
  std::size_t tag_dim() const { return tag_dim_; }
  std::size_t rank() const { return rows_.size(); }

  struct Reduction {
    SparseVec remainder;  // fully reduced: zero at every pivot column
    SparseVec tag;        // v = sum c_i row_i + remainder, tag = sum c_i tag_i
  };

  /// Full reduction against all rows.
  Reduction reduce(const SparseVec& v) const;

  /// Adds v with the given tag. Returns std::nullopt when v was independent;
  /// otherwise returns tag - sum c_i tag_i for the dependency v = sum c_i row_i.
  std::optional<SparseVec> insert(const SparseVec& v, const SparseVec& tag = {});

  /// Like insert, but does not build the dependency; returns true when v was independent.
  bool add(const SparseVec& v, const SparseVec& tag = {});
  bool contains(const SparseVec& v) const;

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivot_columns() const;
  /// Columns that are not pivots, increasing.
  std::vector<std::size_t> free_columns() const;
  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }

  /// Coordinates of v's class in ambient / span, read off the free columns
  /// after full reduction (one coordinate per free column, in order).
  std::vector<Rational> quotient_coordinates(const SparseVec& v) const;

 private:
  using Steps = std::vector<std::pair<std::size_t, Rational>>;
  struct Row {
    SparseVec entries;
    SparseVec tag;   // eager: combined tag; deferred: tag given at insertion
    Steps history;   // deferred: (row, coefficient) subtracted while inserting
    Rational scale;  // deferred: normalization applied at insertion
  };
  Reduction reduce_locked(const SparseVec& v, const SparseVec& tag, Steps* steps) const;
  // Deferred mode: base - sum_p w_p tag_p; consumes the weights.
  SparseVec sweep_tags(std::vector<Rational>& w, const SparseVec& base) const;

  std::size_t ambient_;
  std::size_t tag_dim_;
  TagMode mode_;
  std::vector<Row> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;
  mutable DenseAccumulator acc_;
  mutable DenseAccumulator tag_acc_;
  mutable std::mutex scratch_mutex_;
};

}  // namespace milnor::exactla
