#include "milnor/vfilt/vfilt.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor::vfilt {

namespace {

long ceil_rational(const Rational& q) {
  Rational neg = -q;
  return -exactla::floor(neg).get_si();
}

long floor_rational(const Rational& q) { return exactla::floor(q).get_si(); }

void check_conditions(const std::vector<VCondition>& conds) {
  if (conds.empty()) throw InputError("no V-conditions given");
  for (const auto& c : conds) {
    if (c.den <= 0) throw InputError("V-condition denominator must be positive");
    if (c.nvars() != conds.front().nvars()) throw InputError("V-conditions disagree on the number of exponents");
    for (long v : c.coeffs)
      if (v < 0) throw InputError("V-condition coefficients must be nonnegative");
  }
}

// Calls visit(e) for every e in the box prod [0, caps[v]] until it returns true.
template <class Visit>
bool for_each_in_box(const std::vector<long>& caps, Visit&& visit) {
  for (long c : caps)
    if (c < 0) return false;
  std::vector<int> e(caps.size(), 0);
  while (true) {
    if (visit(e)) return true;
    std::size_t i = 0;
    while (i < e.size() && e[i] == caps[i]) e[i++] = 0;
    if (i == e.size()) return false;
    ++e[i];
  }
}

// Conditions rescaled to a common denominator so values compare as integers.
struct Scaled {
  long long lcm = 1;
  std::vector<long long> c0;
  std::vector<std::vector<long long>> coeffs;

  explicit Scaled(const std::vector<VCondition>& conds) {
    for (const auto& c : conds) lcm = std::lcm(lcm, static_cast<long long>(c.den));
    for (const auto& c : conds) {
      long long f = lcm / c.den;
      c0.push_back(c.c0 * f);
      std::vector<long long> row;
      for (long v : c.coeffs) row.push_back(v * f);
      coeffs.push_back(std::move(row));
    }
  }

  long long min_value(const std::vector<int>& e) const {
    long long best = 0;
    for (std::size_t i = 0; i < c0.size(); ++i) {
      long long v = c0[i];
      for (std::size_t j = 0; j < e.size(); ++j) v += coeffs[i][j] * e[j];
      if (i == 0 || v < best) best = v;
    }
    return best;
  }
};

}  // namespace

Rational VCondition::value(const std::vector<int>& exponents) const {
  if (exponents.size() != coeffs.size()) throw InputError("exponent vector has the wrong length");
  if (den <= 0) throw InputError("V-condition denominator must be positive");
  long num = c0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (exponents[i] < 0) throw InputError("negative exponent in V-filtration test");
    num += coeffs[i] * exponents[i];
  }
  return exactla::make_rational(num, den);
}

VCondition parse_vcondition(std::string_view text, const std::vector<std::string>& names) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("empty V-condition");
  VCondition out;
  out.coeffs.assign(names.size(), 0);

  std::string body = s;
  if (s.front() == '(') {
    auto close = s.find(')');
    if (close == std::string::npos) throw InputError("V-condition: missing ')'");
    body = s.substr(1, close - 1);
    std::string rest = s.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '/' || rest.size() == 1) throw InputError("V-condition: expected '/denominator'");
      const std::string digits = rest.substr(1);
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InputError("V-condition: bad denominator '" + digits + "'");
      out.den = std::stol(digits);
      if (out.den <= 0) throw InputError("V-condition denominator must be positive");
    }
  }

  std::size_t pos = 0;
  if (body.empty()) throw InputError("V-condition: empty numerator");
  while (pos < body.size()) {
    long sign = 1;
    if (body[pos] == '+' || body[pos] == '-') {
      sign = body[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw InputError("V-condition: expected '+' or '-' at offset " + std::to_string(pos));
    }
    std::size_t start = pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    const bool has_coef = pos > start;
    long coef = has_coef ? std::stol(body.substr(start, pos - start)) : 1;
    if (pos < body.size() && body[pos] == '*') {
      if (!has_coef) throw InputError("V-condition: '*' without a coefficient");
      ++pos;
    }
    // longest variable name matching here
    std::ptrdiff_t var = -1;
    std::size_t len = 0;
    for (std::size_t v = 0; v < names.size(); ++v)
      if (names[v].size() > len && body.compare(pos, names[v].size(), names[v]) == 0) {
        var = static_cast<std::ptrdiff_t>(v);
        len = names[v].size();
      }
    if (var < 0) {
      if (!has_coef) throw InputError("V-condition: unexpected text at offset " + std::to_string(pos));
      out.c0 += sign * coef;
    } else {
      out.coeffs[static_cast<std::size_t>(var)] += sign * coef;
      pos += len;
    }
  }
  for (long c : out.coeffs)
    if (c < 0) throw InputError("V-condition coefficients must be nonnegative");
  return out;
}

std::string to_string(const VCondition& c, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i] == 0) continue;
    if (!first) os << '+';
    if (c.coeffs[i] != 1) os << c.coeffs[i];
    os << (i < names.size() ? names[i] : "e" + std::to_string(i));
    first = false;
  }
  if (c.c0 != 0 || first) {
    if (!first && c.c0 > 0) os << '+';
    os << c.c0;
  }
  os << ')';
  if (c.den != 1) os << '/' << c.den;
  return os.str();
}

Rational v_value(const std::vector<int>& exponents, const std::vector<VCondition>& conds) {
  check_conditions(conds);
  Rational best = conds.front().value(exponents);
  for (std::size_t i = 1; i < conds.size(); ++i) best = std::min(best, conds[i].value(exponents));
  return best;
}

long sound_cutoff(const Rational& alpha, const std::vector<VCondition>& conds) {
  check_conditions(conds);
  long bound = 0;
  for (std::size_t v = 0; v < conds.front().nvars(); ++v)
    for (const auto& c : conds) {
      if (c.coeffs[v] == 0) continue;
      Rational need = (alpha * c.den - c.c0) / c.coeffs[v];
      bound = std::max(bound, ceil_rational(need));
    }
  return bound;
}

long default_bound(const Rational& alpha, const std::vector<VCondition>& conds) {
  check_conditions(conds);
  long maxden = 0;
  for (const auto& c : conds) maxden = std::max(maxden, c.den);
  return std::max(ceil_rational(2 * alpha * maxden), sound_cutoff(alpha, conds));
}

std::optional<std::vector<int>> grv_witness(const Rational& alpha, const std::vector<VCondition>& conds,
                                            std::optional<long> bound) {
  check_conditions(conds);
  if (sgn(alpha) <= 0) throw InputError("alpha must be positive");
  const long cutoff = sound_cutoff(alpha, conds);
  const long b = bound.value_or(default_bound(alpha, conds));
  if (b < cutoff)
    throw DiagnosticError("search bound " + std::to_string(b) + " is below the sound cutoff " + std::to_string(cutoff));
  Scaled sc(conds);
  Rational target = alpha * Rational(static_cast<long>(sc.lcm));
  if (target.get_den() != 1) return std::nullopt;
  const long long t = target.get_num().get_si();
  std::vector<long> caps(conds.front().nvars(), b);
  std::optional<std::vector<int>> found;
  for_each_in_box(caps, [&](const std::vector<int>& e) {
    if (sc.min_value(e) != t) return false;
    found = e;
    return true;
  });
  return found;
}

bool grv_vanishes(const Rational& alpha, const std::vector<VCondition>& conds, std::optional<long> bound) {
  return !grv_witness(alpha, conds, bound).has_value();
}

std::set<Rational> attained_values(const std::vector<VCondition>& conds, long bound, const Rational& cap) {
  check_conditions(conds);
  Scaled sc(conds);
  std::set<long long> raw;
  std::vector<long> caps(conds.front().nvars(), bound);
  for_each_in_box(caps, [&](const std::vector<int>& e) {
    raw.insert(sc.min_value(e));
    return false;
  });
  std::set<Rational> out;
  for (long long v : raw) {
    Rational q(static_cast<long>(v), static_cast<long>(sc.lcm));
    q.canonicalize();
    if (q <= cap) out.insert(q);
  }
  return out;
}

Implication implication_check(const VCondition& premise, const Rational& a, const VCondition& conclusion,
                              const Rational& b) {
  check_conditions({premise, conclusion});
  const std::size_t n = premise.nvars();
  std::vector<long> caps(n, 0);
  const Rational room = b * conclusion.den - conclusion.c0;
  if (sgn(room) < 0) return {};
  for (std::size_t v = 0; v < n; ++v) {
    if (conclusion.coeffs[v] > 0) {
      caps[v] = floor_rational(room / conclusion.coeffs[v]);
    } else if (premise.coeffs[v] > 0) {
      caps[v] = std::max(0L, ceil_rational((a * premise.den - premise.c0) / premise.coeffs[v]));
    }
  }
  Implication out;
  for_each_in_box(caps, [&](const std::vector<int>& e) {
    if (premise.value(e) >= a && !(conclusion.value(e) > b)) {
      out.holds = false;
      out.counterexample = e;
      return true;
    }
    return false;
  });
  return out;
}

}  // namespace milnor::vfilt
