#include "milnor/localinv/localinv.hpp"

#include <map>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor::localinv {

using exactla::SparseEchelon;
using exactla::SparseVec;
using polyforms::Monomial;

LocalGerm::LocalGerm(const Poly& h, std::vector<Rational> base) : h_(h.nvars()), base_(std::move(base)) {
  if (h.has_negative_exponents()) throw InputError("local germ: Laurent polynomial");
  if (h.nvars() == 0) throw InputError("local germ: no variables");
  if (base_.empty()) base_.assign(h.nvars(), Rational(0));
  if (base_.size() != h.nvars()) throw InputError("local germ: base point has the wrong length");
  if (!exactla::is_zero(h.evaluate(base_))) throw InputError("local germ: h does not vanish at the base point");
  std::vector<Poly> shift;
  for (std::size_t i = 0; i < h.nvars(); ++i)
    shift.push_back(Poly::variable(h.nvars(), i) + Poly::constant(h.nvars(), base_[i]));
  h_ = h.substitute(shift);
}

namespace {

// dim C[x]/(I + m^(N+1)) and whether m^N lies in I + m^(N+1).
struct Truncated {
  std::size_t colength;
  bool certified;
};

Truncated truncated_colength(const std::vector<Poly>& gens, std::size_t n, int N) {
  std::vector<Monomial> monos;
  for (int k = 0; k <= N; ++k)
    for (auto& m : polyforms::monomials_of_degree(n, k)) monos.push_back(std::move(m));
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

  SparseEchelon ideal(monos.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int ord = g.min_degree();
    for (const auto& u : monos) {
      if (polyforms::total_degree(u) + ord > N) continue;
      std::map<std::size_t, Rational> acc;
      for (const auto& [m, c] : g.terms()) {
        auto prod = polyforms::monomial_product(u, m);
        if (polyforms::total_degree(prod) > N) continue;
        acc[index.at(prod)] += c;
      }
      SparseVec v;
      for (auto& [i, c] : acc)
        if (!exactla::is_zero(c)) v.push_back({i, c});
      if (!v.empty()) ideal.add(v);
    }
  }
  bool certified = true;
  for (const auto& m : polyforms::monomials_of_degree(n, N))
    if (!ideal.contains(exactla::sparse_unit(index.at(m)))) {
      certified = false;
      break;
    }
  return {monos.size() - ideal.rank(), certified};
}

JetResult colength(const std::vector<Poly>& gens, std::size_t n, int max_order, const char* what) {
  for (int N = 1; N <= max_order; ++N) {
    auto t = truncated_colength(gens, n, N);
    if (!t.certified) continue;
    auto next = truncated_colength(gens, n, N + 1);
    if (next.colength != t.colength) throw InternalError(std::string(what) + ": jet order certificate failed");
    return {t.colength, N};
  }
  throw UnsupportedInput(std::string(what) + ": no jet order up to " + std::to_string(max_order) +
                         " is certified (critical point not isolated?)");
}

std::vector<Poly> partials(const Poly& h) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < h.nvars(); ++i) out.push_back(h.derivative(i));
  return out;
}

}  // namespace

JetResult local_milnor(const LocalGerm& g, int max_order) {
  return colength(partials(g.h()), g.nvars(), max_order, "local_milnor");
}

JetResult local_tjurina(const LocalGerm& g, int max_order) {
  auto gens = partials(g.h());
  gens.push_back(g.h());
  return colength(gens, g.nvars(), max_order, "local_tjurina");
}

bool is_singular_point(const Poly& f, const std::vector<Rational>& point) {
  if (point.size() != f.nvars()) throw InputError("point has the wrong number of coordinates");
  bool nonzero = false;
  for (const auto& c : point) nonzero = nonzero || !exactla::is_zero(c);
  if (!nonzero) throw InputError("the zero vector is not a projective point");
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (!exactla::is_zero(f.derivative(i).evaluate(point))) return false;
  return true;
}

LocalGerm germ_at_point(const Poly& f, const std::vector<Rational>& point) {
  if (point.size() != f.nvars()) throw InputError("point has the wrong number of coordinates");
  if (f.nvars() < 2) throw InputError("need at least two homogeneous coordinates");
  std::size_t chart = 0;
  for (std::size_t i = 1; i < point.size(); ++i)
    if (abs(point[i]) > abs(point[chart])) chart = i;
  if (exactla::is_zero(point[chart])) throw InputError("the zero vector is not a projective point");
  const std::size_t m = f.nvars() - 1;
  std::vector<Poly> subs;
  std::vector<Rational> affine;
  for (std::size_t i = 0, j = 0; i < f.nvars(); ++i) {
    if (i == chart) {
      subs.push_back(Poly::constant(m, 1));
      continue;
    }
    subs.push_back(Poly::variable(m, j++));
    affine.push_back(point[i] / point[chart]);
  }
  return LocalGerm(f.substitute(subs), affine);
}

TauReconciliation tau_reconciliation(const jacobian::MilnorContext& ctx, const std::vector<PointGerm>& points) {
  TauReconciliation out;
  out.global = jacobian::global_tjurina(ctx);
  for (const auto& p : points) {
    out.local.push_back(local_tjurina(p.germ).value);
    out.local_sum += out.local.back();
  }
  out.pass = out.local_sum == out.global;
  std::ostringstream os;
  os << "sum of local tau = " << out.local_sum << ", global tau = " << out.global;
  out.detail = os.str();
  return out;
}

}  // namespace milnor::localinv
