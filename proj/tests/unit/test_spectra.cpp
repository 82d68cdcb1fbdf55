#include <doctest.h>

#include <random>

#include "milnor/errors.hpp"
#include "milnor/spectra/formulas.hpp"

using namespace milnor;
using namespace milnor::spectra;
using exactla::make_rational;

namespace {

SpectrumMS over(long den, std::initializer_list<long> nums) {
  SpectrumMS s;
  for (long n : nums) s.add(make_rational(n, den));
  return s;
}

SpectrumMS h_spectrum() { return over(20, {9, 13, 14, 17, 18, 19, 21, 22, 23, 26, 27, 31}); }

SpectrumMS mirror(const SpectrumMS& s, const Rational& total) {
  SpectrumMS out;
  for (const auto& [v, m] : s.entries()) out.add(total - v, m);
  return out;
}

}  // namespace

TEST_CASE("quasi-homogeneous spectra") {
  auto bp = WeightSystem::brieskorn_pham({5, 4});
  CHECK(qh_spectrum(bp) == h_spectrum());
  CHECK(qh_milnor_number(bp) == 12);
  CHECK(qh_spectrum(WeightSystem::brieskorn_pham({2, 2})) == SpectrumMS{1});
  CHECK(qh_milnor_number(WeightSystem::brieskorn_pham({2, 2})) == 1);
  auto fermat = qh_spectrum(WeightSystem::brieskorn_pham({5, 5, 5}));
  CHECK(fermat.size() == 64);
  CHECK(fermat.multiplicity(make_rational(3, 5)) == 1);
  CHECK(fermat.multiplicity(make_rational(6, 5)) == 10);
  CHECK_THROWS_AS(qh_spectrum(WeightSystem{{make_rational(2, 5)}}), InputError);
  CHECK_THROWS_AS(qh_spectrum(WeightSystem{{Rational(1)}}), InputError);
  CHECK_THROWS_AS(WeightSystem::brieskorn_pham({1}), InputError);
}

TEST_CASE("quasi-homogeneous spectra are symmetric and sized by mu") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> ex;
    const std::size_t m = 1 + rng() % 3;
    for (std::size_t i = 0; i < m; ++i) ex.push_back(2 + static_cast<int>(rng() % 6));
    auto w = WeightSystem::brieskorn_pham(ex);
    auto s = qh_spectrum(w);
    CHECK(s.size() == qh_milnor_number(w));
    CHECK(mirror(s, Rational(static_cast<long>(m))) == s);
    for (const auto& [v, mult] : s.entries()) {
      CHECK(sgn(v) > 0);
      CHECK(v < static_cast<long>(m));
    }
  }
}

TEST_CASE("Puiseux spectra below one") {
  CHECK(puiseux_spectrum_below1({{5, 4}}) == over(20, {9, 13, 14, 17, 18, 19}));
  CHECK(puiseux_spectrum_below1({{3, 2}}) == SpectrumMS{make_rational(5, 6)});
  CHECK(puiseux_spectrum_below1({{7, 2}}) == over(14, {9, 11, 13}));
  CHECK(symmetrize(puiseux_spectrum_below1({{5, 4}}), 1) == h_spectrum());
  CHECK(puiseux_weights({{2, 3}, {1, 2}}) == std::vector<long>{2, 13});
  CHECK_THROWS_AS(puiseux_spectrum_below1({{4, 2}}), InputError);
  CHECK_THROWS_AS(puiseux_spectrum_below1({{3, 1}}), InputError);
  CHECK_THROWS_AS(puiseux_spectrum_below1({{0, 3}}), InputError);
}

TEST_CASE("one Puiseux pair matches the quasi-homogeneous oracle") {
  int cases = 0;
  for (int k = 2; k < 20 && cases < 120; ++k)
    for (int n = 2; n < 12; ++n) {
      if (std::gcd(k, n) != 1) continue;
      auto below = puiseux_spectrum_below1({{k, n}});
      CHECK(below.size() * 2 == static_cast<std::size_t>((k - 1) * (n - 1)));
      CHECK(symmetrize(below, 1) == qh_spectrum(WeightSystem::brieskorn_pham({k, n})));
      ++cases;
    }
  CHECK(cases >= 100);
}

TEST_CASE("two Puiseux pairs") {
  // y = x^(3/2) + x^(7/4): pairs (3,2), (1,2), mu = 16
  auto below = puiseux_spectrum_below1({{3, 2}, {1, 2}});
  CHECK(below.size() == 8);
  for (const auto& [v, m] : below.entries()) CHECK(v < 1);
}

TEST_CASE("symmetrize") {
  CHECK(symmetrize({}, 1).empty());
  CHECK(symmetrize(SpectrumMS{make_rational(5, 6)}, 1) == (SpectrumMS{make_rational(5, 6), make_rational(7, 6)}));
  CHECK_THROWS_AS(symmetrize(SpectrumMS{Rational(1)}, 1), InputError);
}

TEST_CASE("Thom-Sebastiani joins") {
  auto x5 = qh_spectrum(WeightSystem::brieskorn_pham({5}));
  auto y4 = qh_spectrum(WeightSystem::brieskorn_pham({4}));
  CHECK(ts_join(x5, y4) == h_spectrum());
  auto a1 = SpectrumMS{make_rational(1, 2)};
  auto shifted = ts_join(x5, a1);
  CHECK(shifted == over(10, {7, 9, 11, 13}));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    auto a = qh_spectrum(WeightSystem::brieskorn_pham({2 + static_cast<int>(rng() % 5)}));
    auto b = qh_spectrum(WeightSystem::brieskorn_pham({2 + static_cast<int>(rng() % 5)}));
    auto c = qh_spectrum(WeightSystem::brieskorn_pham({2 + static_cast<int>(rng() % 5)}));
    CHECK(ts_join(a, b) == ts_join(b, a));
    CHECK(ts_join(ts_join(a, b), c) == ts_join(a, ts_join(b, c)));
    CHECK(ts_join(a, b).size() == a.size() * b.size());
  }
}

TEST_CASE("eigenvalue sets and condition (2)") {
  auto ev = ev_set({h_spectrum()});
  std::set<Rational> expected{Rational(0)};
  for (long v : {9, 13, 14, 17, 18, 19, 1, 2, 3, 6, 7, 11}) expected.insert(make_rational(v, 20));
  CHECK(ev.residues() == expected);
  for (long i = 1; i <= 4; ++i) CHECK_FALSE(ev.contains(make_rational(i, 5)));
  CHECK(ev_set({SpectrumMS{Rational(1)}}).residues() == std::set<Rational>{Rational(0)});
  CHECK(ev_set({}).contains(Rational(0)));
  CHECK(condition2(8, 5, ev));
  CHECK(condition2(3, 5, ev));
  CHECK_FALSE(condition2(5, 5, ev));
  CHECK_FALSE(condition2(10, 5, EvSet{}));
  CHECK_THROWS_AS(condition2(1, 0, ev), InputError);
  // the sign of the exponent does not matter for a symmetric spectrum
  EvSet neg;
  const auto sp = h_spectrum();
  for (const auto& [v, m] : sp.entries()) neg.add(-v);
  CHECK(neg.residues() == ev.residues());
}

TEST_CASE("R0 from b-function roots") {
  auto ev = ev_set({h_spectrum()});
  SpectrumMS roots = over(20, {9, 11, 13, 14, 17, 18, 19, 21, 22, 23, 26, 27});
  roots.add(1);
  SpectrumMS b1 = roots, b2 = roots;
  for (long i : {3, 4, 6, 7}) b1.add(make_rational(i, 5));
  for (long i : {4, 6, 7, 8}) b2.add(make_rational(i, 5));
  CHECK(r0_from_bfunction(b1, ev) == over(5, {3, 4, 6, 7}));
  CHECK(r0_from_bfunction(b2, ev) == over(5, {4, 6, 7, 8}));
  CHECK(r0_from_bfunction({}, ev).empty());
  const auto r0 = r0_from_bfunction(b1, ev);
  for (const auto& [v, m] : r0.entries()) CHECK(v.get_den() != 1);
}

TEST_CASE("pole spectrum compatibility") {
  auto sp = over(5, {6, 7, 8, 9});
  CHECK(p_compat_check(sp, over(5, {3, 4, 6, 7})));
  CHECK(p_compat_check(sp, over(5, {4, 6, 7, 8})));
  CHECK_FALSE(p_compat_check(SpectrumMS{make_rational(1, 2)}, SpectrumMS{make_rational(1, 3)}));
  CHECK(p_compat_check(sp, sp));
  CHECK_FALSE(p_compat_check(sp, SpectrumMS{2}));
}

TEST_CASE("spectrum JSON round trip") {
  auto s = h_spectrum();
  s.add(make_rational(9, 20));
  CHECK(spectrum_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(spectrum_from_json(nlohmann::json::parse(R"([{"num":1,"den":0,"mult":1}])")), InputError);
  CHECK(to_string(over(5, {3, 4, 4})) == "{3/5, 4/5 (x2)}");
}
