#include <doctest.h>

#include <random>

#include "common.hpp"
#include "milnor/errors.hpp"
#include "milnor/polyforms/diffform.hpp"
#include "milnor/polyforms/grading.hpp"
#include "milnor/polyforms/parse.hpp"

using namespace milnor;
using namespace milnor::polyforms;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t n, int maxdeg, std::size_t terms) {
  Poly p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(n);
    for (auto& e : m) e = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
    p.add_term(m, Rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 2));
  }
  return p;
}

DiffForm random_form(std::mt19937_64& rng, std::size_t n, std::size_t j, int deg) {
  DiffForm w(n, j);
  for (const auto& I : index_tuples(n, j)) {
    if (rng() % 3 == 0) continue;
    Poly g(n);
    for (const auto& m : monomials_of_degree(n, deg))
      if (rng() % 3 == 0) g.add_term(m, static_cast<long>(rng() % 5) - 2);
    w.add_component(I, g);
  }
  return w;
}

int sign_pow(std::size_t e) { return e % 2 ? -1 : 1; }

}  // namespace

TEST_CASE("parse basics and errors") {
  auto vars = default_variables(3);
  CHECK(vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(default_variables(4) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  auto p = parse_poly("x^5 + y^4 z - 2*x*y/3", vars);
  CHECK(p.term_count() == 3);
  CHECK(p.coefficient({1, 1, 0}) == Rational(-2, 3));
  CHECK(parse_poly("(x+y)^2", vars) == parse_poly("x^2+2*x*y+y^2", vars));
  CHECK(parse_poly("x^3*y^-1", vars).has_negative_exponents());
  CHECK(parse_variable_list("a, b ,c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(parse_variable_list("u v") == std::vector<std::string>{"u", "v"});
  CHECK_THROWS_AS(parse_poly("x^", vars), ParseError);
  CHECK_THROWS_AS(parse_poly("w+1", vars), ParseError);
  CHECK_THROWS_AS(parse_poly("x/0", vars), ParseError);
  try {
    parse_poly("x + * y", vars);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 4;
    auto vars = default_variables(n);
    auto p = random_poly(rng, n, 4, rng() % 6);
    CHECK(parse_poly(to_string(p, vars), vars) == p);
  }
}

TEST_CASE("polynomial arithmetic identities") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 3;
    auto a = random_poly(rng, n, 3, 1 + rng() % 4);
    auto b = random_poly(rng, n, 3, 1 + rng() % 4);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    for (std::size_t i = 0; i < n; ++i) CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
    std::vector<Rational> pt(n);
    for (auto& v : pt) {
      v = Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
      v.canonicalize();
    }
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST_CASE("Euler identity for homogeneous polynomials") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 3;
    const int d = 1 + static_cast<int>(rng() % 5);
    auto f = testutil::random_homogeneous(rng, n, d, 1 + rng() % 5);
    if (f.is_zero()) continue;
    Poly e(n);
    for (std::size_t i = 0; i < n; ++i) e += Poly::variable(n, i) * f.derivative(i);
    CHECK(e == f * Rational(d));
    auto g = testutil::random_homogeneous(rng, n, 1 + static_cast<int>(rng() % 3), 2);
    CHECK(euler_koszul_identity_check(f, g));
  }
  CHECK_THROWS_AS(euler_koszul_identity_check(testutil::poly("x^2+y"), testutil::poly("x")), InputError);
}

TEST_CASE("d of d and contraction squared vanish") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t j = rng() % (n + 1);
    auto w = random_form(rng, n, j, static_cast<int>(rng() % 4));
    if (j + 2 <= n) CHECK(ext_derivative(ext_derivative(w)).is_zero());
    if (j >= 2) CHECK(euler_contract(euler_contract(w)).is_zero());
  }
}

TEST_CASE("wedge is graded commutative and d is a graded derivation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t p = rng() % (n + 1), q = rng() % (n + 1 - p);
    auto a = random_form(rng, n, p, static_cast<int>(rng() % 3));
    auto b = random_form(rng, n, q, static_cast<int>(rng() % 3));
    CHECK(wedge(a, b) == wedge(b, a) * Rational(sign_pow(p * q)));
    if (p + q + 1 <= n) {
      auto lhs = ext_derivative(wedge(a, b));
      auto rhs = wedge(ext_derivative(a), b) + wedge(a, ext_derivative(b)) * Rational(sign_pow(p));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Cartan formula for the Euler field on homogeneous forms") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t j = 1 + rng() % n;
    const int deg = static_cast<int>(rng() % 4);
    auto w = random_form(rng, n, j, deg);
    DiffForm lie = euler_contract(ext_derivative(w.degree() < n ? w : DiffForm(n, n)));
    if (j == n) lie = DiffForm(n, n);
    lie = lie + ext_derivative(euler_contract(w));
    if (j < n) CHECK(lie == w * Rational(deg + static_cast<int>(j)));
    else CHECK(ext_derivative(euler_contract(w)) == w * Rational(deg + static_cast<int>(j)));
  }
}

TEST_CASE("term signs and repeated indices") {
  Poly one = Poly::constant(3, 1);
  CHECK(DiffForm::term(one, {1, 0}) == DiffForm::term(one, {0, 1}) * Rational(-1));
  CHECK(DiffForm::term(one, {1, 1}).is_zero());
  CHECK_THROWS_AS(wedge(DiffForm::top(one), DiffForm::differential(testutil::poly("x"))), InputError);
  CHECK_THROWS_AS(euler_contract(DiffForm(3, 0)), InputError);
}

TEST_CASE("graded bases and df wedge columns") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 2;
    const int d = 2 + static_cast<int>(rng() % 3);
    auto f = testutil::random_homogeneous(rng, n, d, 2 + rng() % 3);
    if (f.is_zero()) continue;
    GradingConvention conv(d, n);
    const std::size_t j = rng() % n;
    const int k = static_cast<int>(j) + d * static_cast<int>(n - j) + static_cast<int>(rng() % 4);
    FormBasis src(conv, j, k), dst(conv, j + 1, k);
    auto cols = wedge_df_columns(f, src, dst);
    REQUIRE(cols.size() == src.size());
    auto df = DiffForm::differential(f);
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto w = src.from_coords(exactla::sparse_unit(i));
      CHECK(src.to_coords(w) == exactla::sparse_unit(i));
      CHECK(dst.from_coords(cols[i]) == wedge(df, w));
    }
    if (k - d >= 0 && j + 1 <= n) {
      FormBasis below(conv, j + 1, k - d);
      auto dcols = derivative_columns(src, below);
      for (std::size_t i = 0; i < src.size(); ++i)
        CHECK(below.from_coords(dcols[i]) == ext_derivative(src.from_coords(exactla::sparse_unit(i))));
    }
  }
}

TEST_CASE("graded degree convention") {
  GradingConvention conv(5, 3);
  CHECK(conv.graded_degree({1, 0, 0}, 3) == 4);
  CHECK(conv.graded_degree({0, 0, 0}, 2) == 7);
  CHECK(conv.coefficient_degree(2, 9) == 2);
  FormBasis b(conv, 3, 5);
  CHECK(b.size() == 6);
  CHECK(b.index_of({9, 0, 0}, {0, 1, 2}) == -1);
  CHECK_THROWS_AS(b.to_coords(DiffForm::top(testutil::poly("x^3"))), InputError);
}
