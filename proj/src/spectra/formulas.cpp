#include "milnor/spectra/formulas.hpp"

#include <numeric>

#include "milnor/errors.hpp"

namespace milnor::spectra {

namespace {

long inverse_weight(const Rational& w) {
  if (sgn(w) <= 0 || w.get_num() != 1) throw InputError("weight must be 1/a with a >= 2");
  if (!w.get_den().fits_slong_p()) throw InputError("weight denominator too large");
  long a = w.get_den().get_si();
  if (a < 2) throw InputError("weight must be 1/a with a >= 2");
  return a;
}

}  // namespace

void WeightSystem::validate() const {
  for (const auto& w : weights) inverse_weight(w);
}

WeightSystem WeightSystem::brieskorn_pham(const std::vector<int>& exponents) {
  WeightSystem w;
  for (int a : exponents) {
    if (a < 2) throw InputError("Brieskorn-Pham exponents must be >= 2");
    w.weights.push_back(exactla::make_rational(1, a));
  }
  return w;
}

SpectrumMS qh_spectrum(const WeightSystem& w) {
  w.validate();
  SpectrumMS out;
  if (w.weights.empty()) return out;
  std::vector<long> top;
  for (const auto& x : w.weights) top.push_back(inverse_weight(x) - 1);
  std::vector<long> a(top.size(), 1);
  while (true) {
    Rational v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * w.weights[i];
    out.add(v);
    std::size_t i = 0;
    while (i < a.size() && a[i] == top[i]) a[i++] = 1;
    if (i == a.size()) break;
    ++a[i];
  }
  return out;
}

std::size_t qh_milnor_number(const WeightSystem& w) {
  w.validate();
  std::size_t mu = 1;
  for (const auto& x : w.weights) mu *= static_cast<std::size_t>(inverse_weight(x) - 1);
  return mu;
}

void validate_puiseux(const std::vector<PuiseuxPair>& pairs) {
  for (const auto& p : pairs) {
    if (p.k <= 0 || p.n <= 0) throw InputError("Puiseux pair entries must be positive");
    if (p.n == 1) throw InputError("Puiseux pair needs n > 1");
    if (std::gcd(p.k, p.n) != 1) throw InputError("Puiseux pair needs gcd(k, n) = 1");
  }
}

std::vector<long> puiseux_weights(const std::vector<PuiseuxPair>& pairs) {
  validate_puiseux(pairs);
  std::vector<long> w;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i == 0) w.push_back(pairs[0].k);
    else w.push_back(w.back() * pairs[i - 1].n * pairs[i].n + pairs[i].k);
  }
  return w;
}

SpectrumMS puiseux_spectrum_below1(const std::vector<PuiseuxPair>& pairs) {
  auto w = puiseux_weights(pairs);
  const std::size_t g = pairs.size();
  SpectrumMS out;
  for (std::size_t v = 0; v < g; ++v) {
    long tail = 1;
    for (std::size_t u = v + 1; u < g; ++u) tail *= pairs[u].n;
    const long nv = pairs[v].n, wv = w[v];
    for (long i = 1; i < nv; ++i)
      for (long j = 1; j < wv; ++j) {
        Rational inner = exactla::make_rational(i, nv) + exactla::make_rational(j, wv);
        if (inner >= 1) continue;
        for (long r = 0; r < tail; ++r) out.add((r + inner) / tail);
      }
  }
  return out;
}

SpectrumMS symmetrize(const SpectrumMS& s, const Rational& center) {
  SpectrumMS out;
  for (const auto& [v, m] : s.entries()) {
    if (v >= center) throw InputError("symmetrize: entry " + exactla::to_string(v) + " is not below the center");
    out.add(v, m);
    out.add(2 * center - v, m);
  }
  return out;
}

SpectrumMS ts_join(const SpectrumMS& a, const SpectrumMS& b) {
  SpectrumMS out;
  for (const auto& [x, mx] : a.entries())
    for (const auto& [y, my] : b.entries()) out.add(x + y, mx * my);
  return out;
}

Rational residue(const Rational& q) { return exactla::frac(q); }

EvSet ev_set(const std::vector<SpectrumMS>& local_spectra) {
  EvSet ev;
  for (const auto& s : local_spectra)
    for (const auto& [v, m] : s.entries()) ev.add(v);
  return ev;
}

bool condition2(int k, int d, const EvSet& ev) {
  if (d < 1) throw InputError("condition2: d must be positive");
  return !ev.contains(exactla::make_rational(k, d));
}

SpectrumMS r0_from_bfunction(const SpectrumMS& roots, const EvSet& ev) {
  SpectrumMS out;
  for (const auto& [v, m] : roots.entries())
    if (!ev.contains(v)) out.add(v, m);
  return out;
}

bool p_compat_check(const SpectrumMS& sp, const SpectrumMS& spP) {
  for (const auto& [a, m] : spP.entries()) {
    bool found = false;
    for (const auto& [b, mb] : sp.entries()) {
      Rational diff = b - a;
      if (sgn(diff) >= 0 && diff.get_den() == 1) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace milnor::spectra
