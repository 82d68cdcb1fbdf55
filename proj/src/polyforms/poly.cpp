#include "milnor/polyforms/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor::polyforms {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool has_negative_exponent(const Monomial& m) {
  return std::any_of(m.begin(), m.end(), [](int e) { return e < 0; });
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw InputError("monomial variable count mismatch");
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void enumerate(std::size_t nvars, std::size_t pos, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate(nvars, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars == 0) return out;
  Monomial cur(nvars, 0);
  enumerate(nvars, 0, degree, cur, out);
  return out;
}

// ---------------------------------------------------------------------------

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InputError("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(m);
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p(m.size());
  p.add_term(m, c);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& coef) {
  if (m.size() != nvars_) throw InputError("monomial variable count mismatch");
  Rational c = coef;
  c.canonicalize();
  if (exactla::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (exactla::is_zero(it->second)) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (nvars_ != o.nvars_) throw InputError("polynomials live in different rings");
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (exactla::is_zero(c)) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool Poly::operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars_) throw InputError("derivative: variable index out of range");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.add_term(dm, c * m[var]);
  }
  return r;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

int Poly::degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }
int Poly::max_degree() const { return degree(); }
int Poly::min_degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

bool Poly::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return has_negative_exponent(t.first); });
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw InputError("evaluate: point has wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] < 0) {
        if (exactla::is_zero(point[i])) throw InputError("evaluate: negative power of zero");
        for (int e = 0; e < -m[i]; ++e) t /= point[i];
      } else {
        for (int e = 0; e < m[i]; ++e) t *= point[i];
      }
    }
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(const std::vector<Poly>& subs) const {
  if (subs.size() != nvars_) throw InputError("substitute: wrong number of substitutions");
  if (has_negative_exponents()) throw InputError("substitute: Laurent input not supported");
  std::size_t target = subs.empty() ? 0 : subs.front().nvars();
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i] > 0) t = t * subs[i].pow(static_cast<unsigned>(m[i]));
    r += t;
  }
  return r;
}

Poly Poly::homogeneous_part(int degree) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) == degree) r.add_term(m, c);
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::string> default_variables(std::size_t n) {
  if (n <= 3) {
    std::vector<std::string> all{"x", "y", "z"};
    return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)};
  }
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::string to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.nvars()) throw InputError("to_string: variable name count mismatch");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    bool wrote = false;
    if (mag != 1 || constant_term) {
      os << exactla::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << vars[i];
      if (m[i] != 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace milnor::polyforms
