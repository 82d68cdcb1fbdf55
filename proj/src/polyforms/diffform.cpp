#include "milnor/polyforms/diffform.hpp"

#include <algorithm>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor::polyforms {

namespace {

void tuples_rec(std::size_t n, std::size_t j, int next, IndexTuple& cur, std::vector<IndexTuple>& out) {
  if (cur.size() == j) {
    out.push_back(cur);
    return;
  }
  for (int i = next; i < static_cast<int>(n); ++i) {
    cur.push_back(i);
    tuples_rec(n, j, i + 1, cur, out);
    cur.pop_back();
  }
}

// Sorts `idx` in place; returns the sign of the sorting permutation, 0 if an
// index repeats.
int sort_with_sign(IndexTuple& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t k = i; k > 0 && idx[k - 1] > idx[k]; --k) {
      std::swap(idx[k - 1], idx[k]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

}  // namespace

std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t j) {
  std::vector<IndexTuple> out;
  if (j > n) return out;
  IndexTuple cur;
  tuples_rec(n, j, 0, cur, out);
  return out;
}

DiffForm::DiffForm(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree) {
  if (degree > nvars) throw InputError("form degree exceeds number of variables");
}

DiffForm DiffForm::term(const Poly& g, const IndexTuple& indices) {
  DiffForm w(g.nvars(), indices.size());
  IndexTuple idx = indices;
  for (int i : idx)
    if (i < 0 || i >= static_cast<int>(g.nvars())) throw InputError("form index out of range");
  int s = sort_with_sign(idx);
  if (s != 0) w.add_component(idx, g * Rational(s));
  return w;
}

DiffForm DiffForm::differential(const Poly& f) {
  DiffForm w(f.nvars(), 1);
  for (std::size_t i = 0; i < f.nvars(); ++i) w.add_component({static_cast<int>(i)}, f.derivative(i));
  return w;
}

DiffForm DiffForm::top(const Poly& g) {
  IndexTuple all(g.nvars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return term(g, all);
}

Poly DiffForm::component(const IndexTuple& indices) const {
  auto it = comps_.find(indices);
  return it == comps_.end() ? Poly(nvars_) : it->second;
}

void DiffForm::add_component(const IndexTuple& indices, const Poly& g) {
  if (indices.size() != degree_) throw InputError("component has wrong form degree");
  if (g.nvars() != nvars_) throw InputError("component lives in a different ring");
  if (!std::is_sorted(indices.begin(), indices.end()) ||
      std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw InputError("index tuple must be strictly increasing");
  if (g.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(indices, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

void DiffForm::check_compatible(const DiffForm& o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_) throw InputError("forms of different type");
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
  check_compatible(o);
  DiffForm r = *this;
  for (const auto& [I, g] : o.comps_) r.add_component(I, g);
  return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const { return *this + o * Rational(-1); }

DiffForm DiffForm::operator*(const Rational& c) const {
  DiffForm r(nvars_, degree_);
  for (const auto& [I, g] : comps_) r.add_component(I, g * c);
  return r;
}

DiffForm DiffForm::times(const Poly& g) const {
  DiffForm r(nvars_, degree_);
  for (const auto& [I, h] : comps_) r.add_component(I, h * g);
  return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
  return nvars_ == o.nvars_ && degree_ == o.degree_ && comps_ == o.comps_;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.nvars() != b.nvars()) throw InputError("wedge: forms live in different rings");
  if (a.degree() + b.degree() > a.nvars()) throw InputError("wedge: degree exceeds number of variables");
  DiffForm r(a.nvars(), a.degree() + b.degree());
  for (const auto& [I, g] : a.components())
    for (const auto& [J, h] : b.components()) {
      IndexTuple idx = I;
      idx.insert(idx.end(), J.begin(), J.end());
      int s = sort_with_sign(idx);
      if (s != 0) r.add_component(idx, g * h * Rational(s));
    }
  return r;
}

DiffForm ext_derivative(const DiffForm& a) {
  if (a.degree() == a.nvars()) return DiffForm(a.nvars(), a.degree());
  DiffForm r(a.nvars(), a.degree() + 1);
  for (const auto& [I, g] : a.components())
    for (std::size_t l = 0; l < a.nvars(); ++l) {
      Poly dg = g.derivative(l);
      if (dg.is_zero()) continue;
      IndexTuple idx{static_cast<int>(l)};
      idx.insert(idx.end(), I.begin(), I.end());
      int s = sort_with_sign(idx);
      if (s != 0) r.add_component(idx, dg * Rational(s));
    }
  return r;
}

DiffForm euler_contract(const DiffForm& a) {
  if (a.degree() == 0) throw InputError("euler_contract: 0-form input");
  DiffForm r(a.nvars(), a.degree() - 1);
  for (const auto& [I, g] : a.components())
    for (std::size_t pos = 0; pos < I.size(); ++pos) {
      IndexTuple rest = I;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      Rational s = (pos % 2 == 0) ? 1 : -1;
      r.add_component(rest, g * Poly::variable(a.nvars(), static_cast<std::size_t>(I[pos])) * s);
    }
  return r;
}

bool euler_koszul_identity_check(const Poly& f, const Poly& g) {
  if (!f.is_homogeneous() || f.has_negative_exponents())
    throw InputError("euler_koszul_identity_check: f must be a homogeneous polynomial");
  DiffForm lhs = wedge(DiffForm::differential(f), euler_contract(DiffForm::top(g)));
  DiffForm rhs = DiffForm::top(f * g * Rational(f.degree()));
  return lhs == rhs;
}

std::string to_string(const DiffForm& w, const std::vector<std::string>& vars) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [I, g] : w.components()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(g, vars) << ')';
    for (std::size_t k = 0; k < I.size(); ++k) os << (k ? "^" : " ") << 'd' << vars[static_cast<std::size_t>(I[k])];
  }
  return os.str();
}

}  // namespace milnor::polyforms
