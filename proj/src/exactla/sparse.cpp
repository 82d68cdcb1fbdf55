#include "milnor/exactla/sparse.hpp"

#include <algorithm>

#include "milnor/errors.hpp"

namespace milnor::exactla {

SparseVec sparse_unit(std::size_t index, const Rational& value) {
  if (is_zero(value)) return {};
  return {SparseEntry{index, value}};
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& b_scale) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      Rational v = b[j].value * b_scale;
      if (!is_zero(v)) out.push_back({b[j].index, std::move(v)});
      ++j;
    } else {
      Rational v = a[i].value + b[j].value * b_scale;
      if (!is_zero(v)) out.push_back({a[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& a, const Rational& s) {
  if (is_zero(s)) return {};
  SparseVec out = a;
  for (auto& e : out) e.value *= s;
  return out;
}

SparseVec sparse_from_dense(const std::vector<Rational>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) out.push_back({i, dense[i]});
  return out;
}

std::vector<Rational> sparse_to_dense(const SparseVec& v, std::size_t dim) {
  std::vector<Rational> out(dim);
  for (const auto& e : v) {
    if (e.index >= dim) throw InputError("sparse vector index out of range");
    out[e.index] = e.value;
  }
  return out;
}

bool sparse_is_valid(const SparseVec& v, std::size_t dim) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].index >= dim || is_zero(v[i].value)) return false;
    if (i > 0 && v[i - 1].index >= v[i].index) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

DenseAccumulator::DenseAccumulator(std::size_t dim) { resize(dim); }

void DenseAccumulator::resize(std::size_t dim) {
  values_.assign(dim, Rational(0));
  touched_flag_.assign(dim, 0);
  touched_.clear();
}

void DenseAccumulator::touch(std::size_t index) {
  if (!touched_flag_[index]) {
    touched_flag_[index] = 1;
    touched_.push_back(index);
  }
}

void DenseAccumulator::add(const SparseVec& v, const Rational& scale) {
  for (const auto& e : v) {
    touch(e.index);
    mpq_mul(scratch_.get_mpq_t(), e.value.get_mpq_t(), scale.get_mpq_t());
    mpq_add(values_[e.index].get_mpq_t(), values_[e.index].get_mpq_t(), scratch_.get_mpq_t());
  }
}

void DenseAccumulator::add_entry(std::size_t index, const Rational& value) {
  touch(index);
  values_[index] += value;
}

Rational& DenseAccumulator::at(std::size_t index) {
  touch(index);
  return values_[index];
}

SparseVec DenseAccumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  out.reserve(touched_.size());
  for (auto i : touched_) {
    if (!is_zero(values_[i])) {
      out.push_back({i, Rational(0)});
      mpq_swap(out.back().value.get_mpq_t(), values_[i].get_mpq_t());
    }
    touched_flag_[i] = 0;
  }
  touched_.clear();
  return out;
}

void DenseAccumulator::clear() {
  for (auto i : touched_) {
    values_[i] = 0;
    touched_flag_[i] = 0;
  }
  touched_.clear();
}

// ---------------------------------------------------------------------------

SparseEchelon::SparseEchelon(std::size_t ambient, std::size_t tag_dim, TagMode mode)
    : ambient_(ambient),
      tag_dim_(tag_dim),
      mode_(mode),
      pivot_row_(ambient, -1),
      acc_(ambient),
      tag_acc_(tag_dim) {}

SparseEchelon::SparseEchelon(const SparseEchelon& other)
    : ambient_(other.ambient_),
      tag_dim_(other.tag_dim_),
      mode_(other.mode_),
      rows_(other.rows_),
      pivot_row_(other.pivot_row_),
      acc_(other.ambient_),
      tag_acc_(other.tag_dim_) {}

SparseEchelon& SparseEchelon::operator=(const SparseEchelon& other) {
  if (this != &other) {
    ambient_ = other.ambient_;
    tag_dim_ = other.tag_dim_;
    mode_ = other.mode_;
    rows_ = other.rows_;
    pivot_row_ = other.pivot_row_;
    acc_.resize(ambient_);
    tag_acc_.resize(tag_dim_);
  }
  return *this;
}

SparseEchelon::SparseEchelon(SparseEchelon&& other) noexcept
    : ambient_(other.ambient_),
      tag_dim_(other.tag_dim_),
      mode_(other.mode_),
      rows_(std::move(other.rows_)),
      pivot_row_(std::move(other.pivot_row_)),
      acc_(std::move(other.acc_)),
      tag_acc_(std::move(other.tag_acc_)) {}

SparseEchelon& SparseEchelon::operator=(SparseEchelon&& other) noexcept {
  ambient_ = other.ambient_;
  tag_dim_ = other.tag_dim_;
  mode_ = other.mode_;
  rows_ = std::move(other.rows_);
  pivot_row_ = std::move(other.pivot_row_);
  acc_ = std::move(other.acc_);
  tag_acc_ = std::move(other.tag_acc_);
  return *this;
}

SparseEchelon::~SparseEchelon() = default;

SparseEchelon::Reduction SparseEchelon::reduce_locked(const SparseVec& v, const SparseVec& tag, Steps* steps) const {
  if (!sparse_is_valid(v, ambient_)) throw InputError("vector does not match echelon ambient dimension");
  const bool eager = tag_dim_ > 0 && mode_ == TagMode::eager;
  acc_.add(v, Rational(1));
  if (eager) tag_acc_.add(tag, Rational(1));
  if (!v.empty()) {
    Rational coef;
    for (std::size_t c = v.front().index; c < ambient_; ++c) {
      if (is_zero(acc_.peek(c))) continue;
      auto p = pivot_row_[c];
      if (p < 0) continue;
      coef = acc_.peek(c);
      const Row& row = rows_[static_cast<std::size_t>(p)];
      acc_.add(row.entries, -coef);
      if (eager) tag_acc_.add(row.tag, -coef);
      if (steps) steps->emplace_back(static_cast<std::size_t>(p), coef);
    }
  }
  Reduction out;
  out.remainder = acc_.take();
  if (eager) out.tag = tag_acc_.take();
  return out;
}

SparseVec SparseEchelon::sweep_tags(std::vector<Rational>& w, const SparseVec& base) const {
  tag_acc_.add(base, Rational(1));
  Rational f;
  for (std::size_t p = rows_.size(); p-- > 0;) {
    if (is_zero(w[p])) continue;
    const Row& row = rows_[p];
    f = w[p] * row.scale;
    tag_acc_.add(row.tag, -f);
    for (const auto& [q, c] : row.history) w[q] -= f * c;
  }
  return tag_acc_.take();
}

SparseEchelon::Reduction SparseEchelon::reduce(const SparseVec& v) const {
  std::lock_guard lock(scratch_mutex_);
  const bool deferred = tag_dim_ > 0 && mode_ == TagMode::deferred;
  Steps steps;
  auto r = reduce_locked(v, {}, deferred ? &steps : nullptr);
  if (deferred) {
    std::vector<Rational> w(rows_.size());
    for (const auto& [p, c] : steps) w[p] += c;
    r.tag = sweep_tags(w, {});
  }
  // the accumulated tag is -(sum c_i tag_i); report +sum c_i tag_i
  for (auto& e : r.tag) e.value = -e.value;
  return r;
}

std::optional<SparseVec> SparseEchelon::insert(const SparseVec& v, const SparseVec& tag) {
  std::lock_guard lock(scratch_mutex_);
  if (tag_dim_ > 0 && !sparse_is_valid(tag, tag_dim_)) throw InputError("tag does not match tag dimension");
  const bool deferred = tag_dim_ > 0 && mode_ == TagMode::deferred;
  Steps steps;
  auto r = reduce_locked(v, tag, deferred ? &steps : nullptr);
  if (r.remainder.empty()) {
    if (!deferred) return std::move(r.tag);
    std::vector<Rational> w(rows_.size());
    for (const auto& [p, c] : steps) w[p] += c;
    return sweep_tags(w, tag);
  }
  Rational inv = 1 / r.remainder.front().value;
  for (auto& e : r.remainder) e.value *= inv;
  pivot_row_[r.remainder.front().index] = static_cast<std::ptrdiff_t>(rows_.size());
  if (deferred) {
    rows_.push_back(Row{std::move(r.remainder), tag, std::move(steps), inv});
  } else {
    for (auto& e : r.tag) e.value *= inv;
    rows_.push_back(Row{std::move(r.remainder), std::move(r.tag), {}, Rational(1)});
  }
  return std::nullopt;
}

bool SparseEchelon::add(const SparseVec& v, const SparseVec& tag) {
  std::lock_guard lock(scratch_mutex_);
  if (tag_dim_ > 0 && !sparse_is_valid(tag, tag_dim_)) throw InputError("tag does not match tag dimension");
  const bool deferred = tag_dim_ > 0 && mode_ == TagMode::deferred;
  Steps steps;
  auto r = reduce_locked(v, tag, deferred ? &steps : nullptr);
  if (r.remainder.empty()) return false;
  Rational inv = 1 / r.remainder.front().value;
  for (auto& e : r.remainder) e.value *= inv;
  pivot_row_[r.remainder.front().index] = static_cast<std::ptrdiff_t>(rows_.size());
  if (deferred) {
    rows_.push_back(Row{std::move(r.remainder), tag, std::move(steps), inv});
  } else {
    for (auto& e : r.tag) e.value *= inv;
    rows_.push_back(Row{std::move(r.remainder), std::move(r.tag), {}, Rational(1)});
  }
  return true;
}

bool SparseEchelon::contains(const SparseVec& v) const { return reduce(v).remainder.empty(); }

std::vector<std::size_t> SparseEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (pivot_row_[c] >= 0) out.push_back(c);
  return out;
}

std::vector<std::size_t> SparseEchelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

std::vector<Rational> SparseEchelon::quotient_coordinates(const SparseVec& v) const {
  auto rem = reduce(v).remainder;
  std::vector<Rational> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (pivot_row_[c] >= 0) continue;
    out.emplace_back(0);
    while (k < rem.size() && rem[k].index < c) ++k;
    if (k < rem.size() && rem[k].index == c) out.back() = rem[k].value;
  }
  return out;
}

}  // namespace milnor::exactla
