#include "milnor/koszulss/koszul.hpp"

#include "milnor/errors.hpp"

namespace milnor::koszulss {

const KoszulSlice& KoszulComplex::slice(int k) const {
  return slices_.get(k, [&] {
    const auto& conv = ctx_.convention();
    const std::size_t n = ctx_.n();
    FormBasis lower(conv, n - 2, k);
    FormBasis middle(conv, n - 1, k);
    auto lower_cols = polyforms::wedge_df_columns(ctx_.f(), lower, middle);
    SparseEchelon boundaries(middle.size());
    for (const auto& c : lower_cols) boundaries.insert(c);

    // Cocycles supported on the free columns of the boundary echelon.
    const auto free = boundaries.free_columns();
    const auto& wedge = ctx_.top_slice(k).wedge_columns;
    SparseEchelon restricted(ctx_.top_slice(k).top.size(), free.size(), SparseEchelon::TagMode::deferred);
    std::vector<SparseVec> reps;
    for (std::size_t j = 0; j < free.size(); ++j) {
      auto dep = restricted.insert(wedge[free[j]], exactla::sparse_unit(j));
      if (!dep) continue;
      SparseVec rep;
      for (const auto& e : *dep) rep.push_back({free[e.index], e.value});
      reps.push_back(std::move(rep));
    }
    SparseEchelon classes(middle.size(), reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (classes.insert(reps[i], exactla::sparse_unit(i))) throw InternalError("Koszul slice: dependent representatives");

    FormBasis below(conv, n, k - ctx_.d());
    auto dcols = polyforms::derivative_columns(middle, below);
    return KoszulSlice{k,
                       std::move(lower),
                       std::move(middle),
                       std::move(lower_cols),
                       std::move(boundaries),
                       std::move(reps),
                       std::move(classes),
                       std::move(dcols)};
  });
}

Vector KoszulComplex::n_coordinates(int k, const SparseVec& cocycle) const {
  const KoszulSlice& s = slice(k);
  if (!exactla::sparse_is_valid(cocycle, s.middle.size())) throw InputError("n_coordinates: coordinates out of range");
  auto red = s.boundaries.reduce(cocycle);
  auto cls = s.classes.reduce(red.remainder);
  if (!cls.remainder.empty()) throw InputError("n_coordinates: form is not closed under df^");
  return exactla::sparse_to_dense(cls.tag, s.reps.size());
}

SparseVec KoszulComplex::derivative(int k, const SparseVec& form) const {
  const KoszulSlice& s = slice(k);
  if (!exactla::sparse_is_valid(form, s.middle.size())) throw InputError("derivative: coordinates out of range");
  exactla::DenseAccumulator acc(ctx_.top_slice(k - ctx_.d()).top.size());
  for (const auto& e : form) acc.add(s.derivative_columns[e.index], e.value);
  return acc.take();
}

std::size_t nu(const KoszulComplex& kc, int k) {
  if (k < 0) throw InputError("nu: degree must be nonnegative");
  return kc.slice(k).reps.size();
}

RationalMatrix d1_matrix(const KoszulComplex& kc, int k) {
  const auto& ctx = kc.context();
  const KoszulSlice& s = kc.slice(k);
  const int m = k - ctx.d();
  RationalMatrix out(ctx.mu(m), s.reps.size());
  for (std::size_t j = 0; j < s.reps.size(); ++j) {
    Vector col = ctx.normal_form(m, kc.derivative(k, s.reps[j]));
    for (std::size_t i = 0; i < col.size(); ++i) out(i, j) = col[i];
  }
  return out;
}

bool image_membership(const KoszulComplex& kc, const polyforms::Poly& g, int k) {
  const auto& ctx = kc.context();
  if (g.is_zero()) return true;
  const int m = k - ctx.d();
  if (!g.is_homogeneous() || g.degree() + static_cast<int>(ctx.n()) != m)
    throw InputError("image_membership: class degree does not match k - d");
  Vector v = ctx.normal_form(m, g);
  RationalMatrix D = d1_matrix(kc, k);
  return exactla::solve(D, v).has_value();
}

std::size_t dbar_rank(const KoszulComplex& kc, int k) {
  const auto& ctx = kc.context();
  RationalMatrix D = d1_matrix(kc, k + ctx.d());
  auto tors = jacobian::torsion_subspaces(ctx, {k, k}).at(k);
  if (D.cols() == 0) return 0;
  RationalMatrix both = tors.dim() ? tors.basis().hconcat(D) : D;
  return exactla::rank(both) - tors.dim();
}

}  // namespace milnor::koszulss
