#include <doctest.h>

#include <random>

#include "milnor/errors.hpp"
#include "milnor/vfilt/vfilt.hpp"

using namespace milnor;
using namespace milnor::vfilt;
using exactla::make_rational;

namespace {

const std::vector<std::string> kNames{"i", "j", "k"};

std::vector<VCondition> paper_conditions() {
  return {parse_vcondition("(4i+5j+9)/20", kNames), parse_vcondition("(i+j+k+3)/5", kNames)};
}

}  // namespace

TEST_CASE("parsing conditions") {
  auto c = parse_vcondition("(4i+5j+9)/20", kNames);
  CHECK(c.c0 == 9);
  CHECK(c.coeffs == std::vector<long>{4, 5, 0});
  CHECK(c.den == 20);
  CHECK(to_string(c, kNames) == "(4i+5j+9)/20");
  auto d = parse_vcondition(" ( i + j + k + 3 ) / 5 ", kNames);
  CHECK(d.coeffs == std::vector<long>{1, 1, 1});
  CHECK(parse_vcondition("2*i+1", kNames).den == 1);
  CHECK(parse_vcondition("(3-1+i)/2", kNames).c0 == 2);
  CHECK_THROWS_AS(parse_vcondition("(i-2j)/3", kNames), InputError);
  CHECK_THROWS_AS(parse_vcondition("(i+w)/3", kNames), InputError);
  CHECK_THROWS_AS(parse_vcondition("(i+j)/0", kNames), InputError);
  CHECK_THROWS_AS(parse_vcondition("(i+j", kNames), InputError);
  CHECK_THROWS_AS(parse_vcondition("", kNames), InputError);
}

TEST_CASE("v values") {
  auto conds = paper_conditions();
  CHECK(v_value({0, 0, 0}, conds) == make_rational(9, 20));
  CHECK(v_value({1, 1, 1}, conds) == make_rational(9, 10));
  CHECK_THROWS_AS(v_value({-1, 0, 0}, conds), InputError);
  CHECK_THROWS_AS(v_value({0, 0}, conds), InputError);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> e{static_cast<int>(rng() % 10), static_cast<int>(rng() % 10), static_cast<int>(rng() % 10)};
    auto base = v_value(e, conds);
    for (std::size_t v = 0; v < 3; ++v) {
      auto up = e;
      ++up[v];
      CHECK(v_value(up, conds) >= base);
    }
  }
}

TEST_CASE("graded pieces of the monomial V-filtration") {
  auto conds = paper_conditions();
  CHECK(grv_vanishes(make_rational(3, 5), conds));
  CHECK(grv_vanishes(make_rational(4, 5), conds));
  CHECK_FALSE(grv_vanishes(make_rational(9, 20), conds));
  CHECK(grv_witness(make_rational(9, 20), conds) == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(grv_vanishes(make_rational(4, 5), conds, 1), DiagnosticError);
  CHECK_THROWS_AS(grv_vanishes(Rational(0), conds), InputError);
  CHECK_THROWS_AS(grv_vanishes(Rational(1), {}), InputError);

  auto seen = attained_values(conds, 100, 1);
  CHECK(seen.count(make_rational(9, 20)) == 1);
  CHECK(seen.count(make_rational(12, 20)) == 0);
  CHECK(seen.count(make_rational(16, 20)) == 0);
}

TEST_CASE("the cutoff is sound against a wide search") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    std::vector<VCondition> conds;
    const std::size_t m = 1 + rng() % 2;
    for (std::size_t c = 0; c < m; ++c) {
      VCondition v;
      v.c0 = static_cast<long>(rng() % 5);
      v.den = 1 + static_cast<long>(rng() % 6);
      v.coeffs = {static_cast<long>(rng() % 4), static_cast<long>(rng() % 4)};
      conds.push_back(v);
    }
    auto alpha = make_rational(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 6));
    auto wide = attained_values(conds, default_bound(alpha, conds) + 10, alpha);
    const bool absent = wide.count(alpha) == 0;
    CHECK(grv_vanishes(alpha, conds, sound_cutoff(alpha, conds)) == absent);
    CHECK(grv_vanishes(alpha, conds) == absent);
  }
}

TEST_CASE("displayed implications") {
  auto conds = paper_conditions();
  CHECK(implication_check(conds[0], make_rational(12, 20), conds[1], make_rational(3, 5)).holds);
  CHECK(implication_check(conds[0], make_rational(16, 20), conds[1], make_rational(4, 5)).holds);
  auto bad = implication_check(conds[0], make_rational(9, 20), conds[1], make_rational(4, 5));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.counterexample.has_value());
  CHECK(conds[0].value(*bad.counterexample) >= make_rational(9, 20));
  CHECK(conds[1].value(*bad.counterexample) <= make_rational(4, 5));
}
