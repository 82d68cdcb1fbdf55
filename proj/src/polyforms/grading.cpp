#include "milnor/polyforms/grading.hpp"

#include <algorithm>

#include "milnor/errors.hpp"

namespace milnor::polyforms {

using exactla::SparseVec;

GradingConvention::GradingConvention(int degree, std::size_t nvars) : d(degree), n(nvars) {
  if (degree < 2) throw InputError("grading convention needs d >= 2");
  if (nvars < 2) throw InputError("grading convention needs n >= 2");
}

int GradingConvention::graded_degree(const Monomial& g, std::size_t form_degree) const {
  const int j = static_cast<int>(form_degree);
  return total_degree(g) + j + d * (static_cast<int>(n) - j);
}

int GradingConvention::coefficient_degree(std::size_t form_degree, int k) const {
  const int j = static_cast<int>(form_degree);
  return k - j - d * (static_cast<int>(n) - j);
}

int graded_degree(const Monomial& g, std::size_t form_degree, const GradingConvention& conv) {
  return conv.graded_degree(g, form_degree);
}

FormBasis graded_basis(std::size_t form_degree, int k, const GradingConvention& conv) {
  return FormBasis(conv, form_degree, k);
}

FormBasis::FormBasis(const GradingConvention& conv, std::size_t form_degree, int k)
    : n_(conv.n), j_(form_degree), k_(k), coeff_deg_(conv.coefficient_degree(form_degree, k)) {
  if (form_degree > conv.n) throw InputError("form degree exceeds number of variables");
  tuples_ = index_tuples(n_, j_);
  monomials_ = monomials_of_degree(n_, coeff_deg_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) monomial_rank_.emplace(monomials_[i], i);
  for (std::size_t i = 0; i < tuples_.size(); ++i) tuple_rank_.emplace(tuples_[i], i);
  terms_.reserve(tuples_.size() * monomials_.size());
  for (const auto& I : tuples_)
    for (const auto& m : monomials_) terms_.push_back(Term{m, I});
}

std::ptrdiff_t FormBasis::monomial_rank(const Monomial& m) const {
  auto it = monomial_rank_.find(m);
  return it == monomial_rank_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::ptrdiff_t FormBasis::tuple_rank(const IndexTuple& indices) const {
  auto it = tuple_rank_.find(indices);
  return it == tuple_rank_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::ptrdiff_t FormBasis::index_of(const Monomial& m, const IndexTuple& indices) const {
  auto t = tuple_rank(indices);
  auto r = monomial_rank(m);
  if (t < 0 || r < 0) return -1;
  return t * static_cast<std::ptrdiff_t>(monomials_.size()) + r;
}

SparseVec FormBasis::to_coords(const DiffForm& w) const {
  if (w.nvars() != n_ || w.degree() != j_) throw InputError("to_coords: form type does not match basis");
  SparseVec out;
  for (const auto& [I, g] : w.components())
    for (const auto& [m, c] : g.terms()) {
      auto idx = index_of(m, I);
      if (idx < 0) throw InputError("to_coords: form has a term outside this graded piece");
      out.push_back({static_cast<std::size_t>(idx), c});
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

DiffForm FormBasis::from_coords(const SparseVec& v) const {
  DiffForm w(n_, j_);
  for (const auto& e : v) {
    if (e.index >= terms_.size()) throw InputError("from_coords: index out of range");
    const auto& t = terms_[e.index];
    w.add_component(t.indices, Poly::monomial(t.monomial, e.value));
  }
  return w;
}

std::vector<SparseVec> wedge_df_columns(const Poly& f, const FormBasis& src, const FormBasis& dst) {
  if (dst.form_degree() != src.form_degree() + 1 || dst.graded_degree() != src.graded_degree())
    throw InputError("wedge_df_columns: incompatible bases");
  const std::size_t n = src.nvars();
  std::vector<Poly> partials;
  for (std::size_t l = 0; l < n; ++l) partials.push_back(f.derivative(l));

  std::vector<SparseVec> cols(src.size());
  exactla::DenseAccumulator acc(dst.size());
  for (std::size_t s = 0; s < src.size(); ++s) {
    const auto& t = src.term(s);
    for (std::size_t l = 0; l < n; ++l) {
      const int li = static_cast<int>(l);
      if (std::find(t.indices.begin(), t.indices.end(), li) != t.indices.end()) continue;
      IndexTuple J = t.indices;
      auto pos = std::lower_bound(J.begin(), J.end(), li);
      const bool odd = (pos - J.begin()) % 2 == 1;
      J.insert(pos, li);
      auto tr = dst.tuple_rank(J);
      for (const auto& [m, c] : partials[l].terms()) {
        auto r = dst.monomial_rank(monomial_product(m, t.monomial));
        if (tr < 0 || r < 0) throw InternalError("wedge_df_columns: f is not homogeneous of the basis degree");
        acc.add_entry(static_cast<std::size_t>(tr) * dst.monomials().size() + static_cast<std::size_t>(r),
                      odd ? Rational(-c) : c);
      }
    }
    cols[s] = acc.take();
  }
  return cols;
}

std::vector<SparseVec> derivative_columns(const FormBasis& src, const FormBasis& dst) {
  if (dst.form_degree() != src.form_degree() + 1) throw InputError("derivative_columns: incompatible bases");
  const std::size_t n = src.nvars();
  std::vector<SparseVec> cols(src.size());
  exactla::DenseAccumulator acc(dst.size());
  for (std::size_t s = 0; s < src.size(); ++s) {
    const auto& t = src.term(s);
    for (std::size_t l = 0; l < n; ++l) {
      const int li = static_cast<int>(l);
      if (t.monomial[l] == 0) continue;
      if (std::find(t.indices.begin(), t.indices.end(), li) != t.indices.end()) continue;
      IndexTuple J = t.indices;
      auto pos = std::lower_bound(J.begin(), J.end(), li);
      const bool odd = (pos - J.begin()) % 2 == 1;
      J.insert(pos, li);
      Monomial m = t.monomial;
      const int e = m[l];
      m[l] -= 1;
      auto tr = dst.tuple_rank(J);
      auto r = dst.monomial_rank(m);
      if (tr < 0 || r < 0) throw InternalError("derivative_columns: target basis has the wrong degree");
      acc.add_entry(static_cast<std::size_t>(tr) * dst.monomials().size() + static_cast<std::size_t>(r),
                    Rational(odd ? -e : e));
    }
    cols[s] = acc.take();
  }
  return cols;
}

}  // namespace milnor::polyforms
