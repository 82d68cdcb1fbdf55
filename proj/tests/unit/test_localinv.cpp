#include <doctest.h>

#include <random>

#include "common.hpp"
#include "milnor/errors.hpp"
#include "milnor/localinv/localinv.hpp"
#include "milnor/spectra/formulas.hpp"

using namespace milnor;
using namespace milnor::localinv;
using exactla::make_rational;

namespace {

Poly p2(const std::string& s) { return testutil::poly(s, 2); }

std::vector<Rational> pt(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("Milnor and Tjurina numbers of plane germs") {
  LocalGerm h(p2("x^5 + x^4*y + y^4"));
  CHECK(local_milnor(h).value == 12);
  CHECK(local_tjurina(h).value == 11);
  CHECK(local_milnor(LocalGerm(p2("x^2+y^2"))).value == 1);
  CHECK(local_tjurina(LocalGerm(p2("x^2+y^2"))).value == 1);
  CHECK(local_milnor(LocalGerm(p2("x^3+y^2"))).value == 2);
  CHECK(local_tjurina(LocalGerm(p2("x^3+y^2"))).value == 2);
  CHECK(local_milnor(LocalGerm(p2("x+y^2"))).value == 0);
}

TEST_CASE("germ errors") {
  CHECK_THROWS_AS(LocalGerm(p2("x^2+1")), InputError);
  CHECK_THROWS_AS(LocalGerm(p2("x^3*y^-1")), InputError);
  CHECK_THROWS_AS(LocalGerm(p2("x^2"), pt({0})), InputError);
  CHECK_THROWS_AS(local_milnor(LocalGerm(p2("x^2"))), UnsupportedInput);
  CHECK_THROWS_AS(local_tjurina(LocalGerm(p2("x^2*y^2")), 12), UnsupportedInput);
}

TEST_CASE("translated germs") {
  // the A2 cusp moved to (1, -2)
  LocalGerm g(p2("(x-1)^3 + (y+2)^2"), pt({1, -2}));
  CHECK(local_milnor(g).value == 2);
  CHECK(g.h() == p2("x^3+y^2"));
}

TEST_CASE("Brieskorn-Pham germs agree with the weight formula") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const int a = 2 + static_cast<int>(rng() % 6), b = 2 + static_cast<int>(rng() % 6);
    Poly h = Poly::monomial({a, 0}) + Poly::monomial({0, b});
    LocalGerm g(h);
    auto mu = local_milnor(g);
    auto tau = local_tjurina(g);
    CHECK(mu.value == spectra::qh_milnor_number(spectra::WeightSystem::brieskorn_pham({a, b})));
    CHECK(tau.value == mu.value);
  }
}

TEST_CASE("mu >= tau on random germs") {
  std::mt19937_64 rng(18);
  int cases = 0;
  while (cases < 100) {
    Poly h = testutil::random_homogeneous(rng, 2, 2 + static_cast<int>(rng() % 3), 2) +
             testutil::random_homogeneous(rng, 2, 5 + static_cast<int>(rng() % 2), 2);
    try {
      LocalGerm g(h);
      auto mu = local_milnor(g, 20).value;
      auto tau = local_tjurina(g, 20).value;
      CHECK(mu >= tau);
      if (mu > 0) CHECK(tau >= 1);
      ++cases;
    } catch (const UnsupportedInput&) {
      ++cases;
    }
  }
}

TEST_CASE("singular points of projective curves") {
  Poly f1 = testutil::poly(testutil::kF1);
  CHECK(is_singular_point(f1, pt({0, 0, 1})));
  CHECK(is_singular_point(f1, pt({0, 0, 7})));
  CHECK_FALSE(is_singular_point(f1, pt({1, 0, 0})));
  Poly fermat = testutil::poly(testutil::kFermat);
  CHECK_FALSE(is_singular_point(fermat, pt({0, 0, 1})));
  CHECK_FALSE(is_singular_point(fermat, pt({1, -1, 0})));
  CHECK_THROWS_AS(is_singular_point(f1, pt({0, 0, 0})), InputError);
  CHECK_THROWS_AS(is_singular_point(f1, pt({0, 1})), InputError);

  auto g = germ_at_point(f1, pt({0, 0, 1}));
  CHECK(g.h() == p2("x^5 + x^4*y + y^4"));
  auto scaled = germ_at_point(f1, {Rational(0), Rational(0), make_rational(-3, 2)});
  CHECK(local_tjurina(scaled).value == 11);
}

TEST_CASE("global and local Tjurina numbers reconcile") {
  jacobian::MilnorContext f1(testutil::poly(testutil::kF1));
  auto ok = tau_reconciliation(f1, {{pt({0, 0, 1}), germ_at_point(f1.f(), pt({0, 0, 1}))}});
  CHECK(ok.pass);
  CHECK(ok.local_sum == 11);
  CHECK(ok.global == 11);
  auto missing = tau_reconciliation(f1, {});
  CHECK_FALSE(missing.pass);
  CHECK(missing.global == 11);
  jacobian::MilnorContext fermat(testutil::poly(testutil::kFermat));
  CHECK(tau_reconciliation(fermat, {}).pass);
  // a nodal cubic: one node at [0:0:1]
  jacobian::MilnorContext nodal(testutil::poly("x^3 + y^3 - x*y*z"));
  auto node = tau_reconciliation(nodal, {{pt({0, 0, 1}), germ_at_point(nodal.f(), pt({0, 0, 1}))}});
  CHECK(node.pass);
  CHECK(node.local_sum == 1);
}
