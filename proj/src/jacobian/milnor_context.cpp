#include "milnor/jacobian/milnor_context.hpp"

#include <algorithm>

#include "milnor/errors.hpp"

namespace milnor::jacobian {

using polyforms::Monomial;

MilnorContext::MilnorContext(Poly f)
    : f_(std::move(f)),
      conv_([&] {
        if (f_.is_zero()) throw InputError("f must be nonzero");
        if (!f_.is_homogeneous()) throw InputError("f must be homogeneous");
        if (f_.has_negative_exponents()) throw InputError("f must be a polynomial");
        return polyforms::GradingConvention(f_.degree(), f_.nvars());
      }()) {
  bool any = false;
  for (std::size_t i = 0; i < conv_.n; ++i) {
    partials_.push_back(f_.derivative(i));
    any = any || !partials_.back().is_zero();
  }
  if (!any) throw InputError("partial derivatives of f all vanish");
  for (std::size_t i = 0; i < conv_.n; ++i) var_mult_.push_back(std::make_unique<DegreeCache<RationalMatrix>>());
}

const TopSlice& MilnorContext::top_slice(int k) const {
  return slices_.get(k, [&] {
    FormBasis top(conv_, conv_.n, k);
    FormBasis sub(conv_, conv_.n - 1, k);
    auto cols = polyforms::wedge_df_columns(f_, sub, top);
    SparseEchelon image(top.size(), sub.size(), SparseEchelon::TagMode::deferred);
    for (std::size_t i = 0; i < cols.size(); ++i) image.add(cols[i], exactla::sparse_unit(i));
    auto standard = image.free_columns();
    return TopSlice{std::move(top), std::move(sub), std::move(cols), std::move(image), std::move(standard)};
  });
}

const SparseEchelon& MilnorContext::tracked_image(int k) const { return top_slice(k).image; }

std::size_t MilnorContext::mu(int k) const { return top_slice(k).standard.size(); }

Vector MilnorContext::normal_form(int k, const SparseVec& top_coords) const {
  const TopSlice& s = top_slice(k);
  if (!exactla::sparse_is_valid(top_coords, s.top.size())) throw InputError("normal_form: coordinates out of range");
  return s.image.quotient_coordinates(top_coords);
}

Vector MilnorContext::normal_form(int k, const Poly& g) const {
  if (g.nvars() != conv_.n) throw InputError("normal_form: polynomial lives in a different ring");
  if (g.has_negative_exponents()) throw InputError("normal_form: polynomial expected");
  const TopSlice& s = top_slice(k);
  return normal_form(k, s.top.to_coords(polyforms::DiffForm::top(g)));
}

std::optional<SparseVec> MilnorContext::solve_wedge(int k, const SparseVec& v) const {
  const SparseEchelon& e = tracked_image(k);
  if (!exactla::sparse_is_valid(v, e.ambient())) throw InputError("solve_wedge: coordinates out of range");
  auto red = e.reduce(v);
  if (!red.remainder.empty()) return std::nullopt;
  return std::move(red.tag);
}

RationalMatrix MilnorContext::multiplication_matrix(int k, const Poly& h) const {
  if (h.nvars() != conv_.n) throw InputError("multiplication_matrix: polynomial lives in a different ring");
  if (!h.is_homogeneous() || h.has_negative_exponents())
    throw InputError("multiplication_matrix: homogeneous polynomial expected");
  const TopSlice& src = top_slice(k);
  if (h.is_zero()) return RationalMatrix(0, src.standard.size());
  const int target = k + h.degree();
  const TopSlice& dst = top_slice(target);
  RationalMatrix m(dst.standard.size(), src.standard.size());
  exactla::DenseAccumulator acc(dst.top.size());
  for (std::size_t j = 0; j < src.standard.size(); ++j) {
    const Monomial& base = src.top.term(src.standard[j]).monomial;
    for (const auto& [mono, c] : h.terms()) {
      auto r = dst.top.monomial_rank(polyforms::monomial_product(base, mono));
      if (r < 0) throw InternalError("multiplication_matrix: product outside target degree");
      acc.add_entry(static_cast<std::size_t>(r), c);
    }
    Vector col = dst.image.quotient_coordinates(acc.take());
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

const RationalMatrix& MilnorContext::variable_multiplication(int k, std::size_t var) const {
  if (var >= conv_.n) throw InputError("variable index out of range");
  return var_mult_[var]->get(k, [&] { return multiplication_matrix(k, Poly::variable(conv_.n, var)); });
}

DegreeWindow default_hilbert_window(const MilnorContext& ctx) {
  const int n = static_cast<int>(ctx.n());
  return {n, 2 * n * ctx.d()};
}

std::size_t mu(const MilnorContext& ctx, int k) {
  if (k < 0) throw InputError("mu: degree must be nonnegative");
  return ctx.mu(k);
}

bool ideal_membership(const MilnorContext& ctx, const Poly& g) {
  if (g.nvars() != ctx.n()) throw InputError("ideal_membership: polynomial lives in a different ring");
  if (g.is_zero()) return true;
  if (!g.is_homogeneous() || g.has_negative_exponents())
    throw InputError("ideal_membership: homogeneous polynomial expected");
  const int k = g.degree() + static_cast<int>(ctx.n());
  auto nf = ctx.normal_form(k, g);
  return std::all_of(nf.begin(), nf.end(), [](const Rational& c) { return c == 0; });
}

namespace {

void require_isolated(const MilnorContext& ctx) {
  if (!isolated_sing_check(ctx))
    throw UnsupportedInput("singularities are not isolated (mu_k does not stabilize)");
}

// Elements of M_k whose products with every variable land in `next` (a
// subspace of M_{k+1}).
Subspace pull_back(const MilnorContext& ctx, int k, const Subspace& next) {
  const std::size_t dim = ctx.mu(k);
  if (dim == 0) return Subspace(0);
  SparseEchelon quot(next.ambient_dim());
  for (std::size_t c = 0; c < next.dim(); ++c) quot.insert(exactla::sparse_from_dense(next.basis_vector(c)));
  const std::size_t qdim = next.ambient_dim() - quot.rank();
  if (qdim == 0) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < dim; ++i) all.push_back(RationalMatrix::identity(dim).column(i));
    return Subspace(dim, all);
  }
  RationalMatrix stacked(qdim * ctx.n(), dim);
  for (std::size_t var = 0; var < ctx.n(); ++var) {
    const RationalMatrix& x = ctx.variable_multiplication(k, var);
    for (std::size_t j = 0; j < dim; ++j) {
      Vector q = quot.quotient_coordinates(x.sparse_column(j));
      for (std::size_t i = 0; i < qdim; ++i) stacked(var * qdim + i, j) = q[i];
    }
  }
  return exactla::kernel_basis(stacked);
}

// T_N(k) for k in the window: classes killed by every monomial of degree N.
std::map<int, Subspace> annihilated_by_power(const MilnorContext& ctx, DegreeWindow w, int N) {
  std::map<int, Subspace> level;
  for (int k = w.lo; k <= w.hi + N; ++k) level.emplace(k, Subspace(ctx.mu(k)));
  for (int step = 1; step <= N; ++step) {
    std::map<int, Subspace> next;
    for (int k = w.lo; k <= w.hi + N - step; ++k) next.emplace(k, pull_back(ctx, k, level.at(k + 1)));
    level = std::move(next);
  }
  return level;
}

struct TorsionSearch {
  int order;
  std::map<int, Subspace> spaces;
};

TorsionSearch torsion_search(const MilnorContext& ctx, DegreeWindow window) {
  require_isolated(ctx);
  const int cap = 4 * static_cast<int>(ctx.n()) * ctx.d();
  int N = ctx.d();
  auto prev = annihilated_by_power(ctx, window, N);
  while (true) {
    if (2 * N > cap) throw DiagnosticError("torsion: annihilator order did not stabilize");
    auto cur = annihilated_by_power(ctx, window, 2 * N);
    bool same = true;
    for (int k = window.lo; k <= window.hi; ++k)
      if (prev.at(k).dim() != cur.at(k).dim()) same = false;
    if (same) return {N, std::move(prev)};
    N *= 2;
    prev = std::move(cur);
  }
}

}  // namespace

std::map<int, Subspace> torsion_subspaces(const MilnorContext& ctx, DegreeWindow window) {
  auto s = torsion_search(ctx, window);
  std::map<int, Subspace> out;
  for (int k = window.lo; k <= window.hi; ++k) out.emplace(k, s.spaces.at(k));
  return out;
}

std::map<int, std::size_t> torsion_dims(const MilnorContext& ctx, DegreeWindow window) {
  std::map<int, std::size_t> out;
  for (const auto& [k, s] : torsion_subspaces(ctx, window)) out[k] = s.dim();
  return out;
}

int torsion_annihilator_order(const MilnorContext& ctx, DegreeWindow window) {
  return torsion_search(ctx, window).order;
}

std::vector<Rational> generic_form_a(std::size_t n) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(static_cast<long>(i + 1));
  return c;
}

std::vector<Rational> generic_form_b(std::size_t n) {
  std::vector<Rational> c;
  Rational p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    c.push_back(p);
    p *= 3;
  }
  return c;
}

namespace {

Poly linear_form(std::size_t n, const std::vector<Rational>& ell) {
  if (ell.size() != n) throw InputError("generic form: wrong number of coefficients");
  Poly l(n);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m(n, 0);
    m[i] = 1;
    l.add_term(m, ell[i]);
  }
  return l;
}

// A degree past every torsion degree and the window.
int top_degree(const MilnorContext& ctx, DegreeWindow window) {
  return std::max(window.hi, static_cast<int>(ctx.n()) * ctx.d()) + ctx.d();
}

}  // namespace

bool avoids_singular_points(const MilnorContext& ctx, const std::vector<Rational>& ell) {
  require_isolated(ctx);
  const int K = top_degree(ctx, {0, 0});
  return exactla::rank(ctx.multiplication_matrix(K, linear_form(ctx.n(), ell))) == ctx.mu(K);
}

std::map<int, std::size_t> torsion_dims_generic(const MilnorContext& ctx, DegreeWindow window,
                                                const std::vector<Rational>& ell) {
  require_isolated(ctx);
  const Poly l = linear_form(ctx.n(), ell);
  if (!avoids_singular_points(ctx, ell))
    throw DiagnosticError("generic form vanishes at a singular point; it cannot detect torsion");
  const int K = top_degree(ctx, window);
  std::map<int, std::size_t> out;
  // power = matrix of ell^(K-k): M_k -> M_K, built downward from K.
  RationalMatrix power = RationalMatrix::identity(ctx.mu(K));
  for (int k = K - 1; k >= window.lo; --k) {
    power = power * ctx.multiplication_matrix(k, l);
    if (k <= window.hi) out[k] = ctx.mu(k) - exactla::rank(power);
  }
  return out;
}

std::vector<std::vector<Rational>> checking_forms(const MilnorContext& ctx, std::size_t count) {
  std::vector<std::vector<Rational>> out;
  auto consider = [&](std::vector<Rational> ell) {
    if (out.size() < count && avoids_singular_points(ctx, ell)) out.push_back(std::move(ell));
  };
  consider(generic_form_a(ctx.n()));
  consider(generic_form_b(ctx.n()));
  // Each singular point kills at most n-1 forms (1, j, j^2, ...).
  for (long j = 4; out.size() < count; ++j) {
    std::vector<Rational> ell;
    Rational p(1);
    for (std::size_t i = 0; i < ctx.n(); ++i, p *= j) ell.push_back(p);
    consider(std::move(ell));
  }
  return out;
}

HilbertRow hilbert_row(const MilnorContext& ctx, DegreeWindow window) {
  auto tors = torsion_dims(ctx, window);
  for (const auto& ell : checking_forms(ctx, 2)) {
    auto alt = torsion_dims_generic(ctx, window, ell);
    if (alt != tors) throw InternalError("torsion: annihilator and generic-form methods disagree");
  }
  HilbertRow row;
  for (int k = window.lo; k <= window.hi; ++k) {
    const std::size_t m = ctx.mu(k);
    row.push_back({k, m, tors.at(k), m - tors.at(k)});
  }
  return row;
}

namespace {

std::optional<std::size_t> stable_value(const MilnorContext& ctx, DegreeWindow w) {
  const int run = static_cast<int>(ctx.n()) * ctx.d();
  if (static_cast<int>(w.size()) < run) return std::nullopt;
  const std::size_t v = ctx.mu(w.hi);
  for (int k = w.hi - run + 1; k <= w.hi; ++k)
    if (ctx.mu(k) != v) return std::nullopt;
  return v;
}

}  // namespace

bool isolated_sing_check(const MilnorContext& ctx) {
  return stable_value(ctx, default_hilbert_window(ctx)).has_value();
}

std::size_t global_tjurina(const MilnorContext& ctx, std::optional<DegreeWindow> window) {
  auto v = stable_value(ctx, window.value_or(default_hilbert_window(ctx)));
  if (!v) throw DiagnosticError("global_tjurina: mu_k is not constant over n*d degrees at the top of the window");
  return *v;
}

std::vector<std::size_t> gamma_series(int d, std::size_t n) {
  if (d < 2 || n < 1) throw InputError("gamma_series: need d >= 2 and n >= 1");
  std::vector<std::size_t> coeffs{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> next(coeffs.size() + static_cast<std::size_t>(d - 1), 0);
    for (std::size_t a = 0; a < coeffs.size(); ++a)
      for (int e = 1; e <= d - 1; ++e) next[a + static_cast<std::size_t>(e)] += coeffs[a];
    coeffs = std::move(next);
  }
  return coeffs;
}

std::size_t gamma(int d, std::size_t n, int k) {
  auto g = gamma_series(d, n);
  return (k < 0 || static_cast<std::size_t>(k) >= g.size()) ? 0 : g[static_cast<std::size_t>(k)];
}

}  // namespace milnor::jacobian
