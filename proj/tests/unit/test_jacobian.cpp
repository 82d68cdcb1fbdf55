#include <doctest.h>

#include "common.hpp"
#include "milnor/errors.hpp"
#include "milnor/jacobian/milnor_context.hpp"

using namespace milnor;
using namespace milnor::jacobian;
using testutil::poly;

namespace {

std::vector<std::size_t> mu_row(const MilnorContext& ctx, int lo, int hi) {
  std::vector<std::size_t> out;
  for (int k = lo; k <= hi; ++k) out.push_back(ctx.mu(k));
  return out;
}

// Monomials x^a y^b z^c of total degree k-3 with every exponent <= e.
std::size_t fermat_oracle(int k, int e) {
  std::size_t count = 0;
  const int deg = k - 3;
  for (int a = 0; a <= e; ++a)
    for (int b = 0; b <= e; ++b) {
      const int c = deg - a - b;
      if (c >= 0 && c <= e) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("hilbert row of the two quintics") {
  const std::vector<std::size_t> expected{1, 3, 6, 10, 12, 12, 11, 11, 11, 11, 11, 11};
  MilnorContext f1(poly(testutil::kF1));
  MilnorContext f2(poly(testutil::kF2));
  CHECK(mu_row(f1, 3, 14) == expected);
  CHECK(mu_row(f2, 3, 14) == expected);
  CHECK(f1.mu(0) == 0);
  CHECK(f1.mu(2) == 0);
}

TEST_CASE("fermat quintic matches the monomial count") {
  MilnorContext ctx(poly(testutil::kFermat));
  auto g = gamma_series(5, 3);
  for (int k = 0; k <= 30; ++k) {
    CHECK(ctx.mu(k) == fermat_oracle(k, 3));
    CHECK(ctx.mu(k) == gamma(5, 3, k));
  }
  CHECK(global_tjurina(ctx) == 0);
  CHECK(isolated_sing_check(ctx));
  auto t = torsion_dims(ctx, default_hilbert_window(ctx));
  for (const auto& [k, v] : t) CHECK(v == ctx.mu(k));
}

TEST_CASE("ideal membership") {
  MilnorContext ctx(poly(testutil::kF1));
  for (const char* g : {"y^4", "x^4*y", "x^3*y^2", "x^5", "x*y^3*z"}) CHECK(ideal_membership(ctx, poly(g)));
  CHECK_FALSE(ideal_membership(ctx, poly("x^2*y^3")));
  CHECK(ideal_membership(ctx, poly("0")));
  CHECK_THROWS_AS(ideal_membership(ctx, poly("x^2+y")), InputError);
}

TEST_CASE("torsion rows") {
  MilnorContext f1(poly(testutil::kF1));
  auto t = torsion_dims(f1, default_hilbert_window(f1));
  for (const auto& [k, v] : t) CHECK(v == ((k == 7 || k == 8) ? 1u : 0u));

  MilnorContext f2(poly(testutil::kF2));
  auto t2 = torsion_dims(f2, default_hilbert_window(f2));
  for (const auto& [k, v] : t2) CHECK(v == ((k == 7 || k == 8) ? 1u : 0u));

  MilnorContext q(poly(testutil::kQuinticA));
  auto tq = torsion_dims(q, default_hilbert_window(q));
  CHECK(tq.at(6) == 1);
  CHECK(tq.at(7) == 2);
  CHECK(tq.at(8) == 2);
  CHECK(tq.at(9) == 1);
  for (const auto& [k, v] : tq)
    if (k < 6 || k > 9) CHECK(v == 0);
  CHECK(global_tjurina(q) == 10);

  MilnorContext a(poly("x^2*y^3+z^5"));
  auto ta = torsion_dims(a, default_hilbert_window(a));
  for (const auto& [k, v] : ta) CHECK(v == ((k >= 6 && k <= 9) ? 1u : 0u));
}

TEST_CASE("torsion is symmetric and agrees with the generic-form method") {
  for (const char* f : {testutil::kF1, testutil::kF2, testutil::kQuinticA, "x^2*y^3+z^5", "x^3*y+y^3*z+z^4"}) {
    MilnorContext ctx(poly(f));
    const int nd = static_cast<int>(ctx.n()) * ctx.d();
    auto w = default_hilbert_window(ctx);
    auto t = torsion_dims(ctx, w);
    for (int k = w.lo; k <= nd - w.lo; ++k) CHECK(t.at(k) == t.at(nd - k));
    CHECK(torsion_dims_generic(ctx, w, generic_form_a(3)) == t);
    CHECK(torsion_dims_generic(ctx, w, generic_form_b(3)) == t);
    auto row = hilbert_row(ctx, w);
    for (const auto& e : row) CHECK(e.mu == e.mu_torsion + e.mu_free);
  }
}

TEST_CASE("global tjurina and isolated singularities") {
  MilnorContext f1(poly(testutil::kF1));
  CHECK(isolated_sing_check(f1));
  CHECK(global_tjurina(f1) == 11);
  CHECK_THROWS_AS(global_tjurina(f1, DegreeWindow{3, 10}), DiagnosticError);

  MilnorContext lines(poly("x*y*(x+y)"));
  CHECK(isolated_sing_check(lines));

  MilnorContext nonreduced(poly("x^2*y^2"));
  CHECK_FALSE(isolated_sing_check(nonreduced));
  CHECK_THROWS_AS(torsion_dims(nonreduced, {3, 10}), UnsupportedInput);
  CHECK_THROWS_AS(global_tjurina(nonreduced), DiagnosticError);
}

TEST_CASE("gamma series") {
  auto g = gamma_series(5, 3);
  const std::vector<std::size_t> mid{1, 3, 6, 10, 12, 12, 10, 6, 3, 1};
  for (int k = 3; k <= 12; ++k) CHECK(g[static_cast<std::size_t>(k)] == mid[static_cast<std::size_t>(k - 3)]);
  CHECK(gamma(5, 3, 2) == 0);
  CHECK(gamma(5, 3, 13) == 0);
  auto h = gamma_series(2, 2);
  CHECK(h.size() == 3);
  CHECK(h[2] == 1);
  CHECK(h[0] + h[1] == 0);
  for (int d = 2; d <= 6; ++d)
    for (std::size_t n = 1; n <= 4; ++n) {
      const int nd = static_cast<int>(n) * d;
      for (int k = 0; k <= nd; ++k) CHECK(gamma(d, n, k) == gamma(d, n, nd - k));
    }
}

TEST_CASE("context rejects bad input") {
  CHECK_THROWS_AS(MilnorContext(poly("x^2+y")), InputError);
  CHECK_THROWS_AS(MilnorContext(poly("0")), InputError);
  CHECK_THROWS_AS(MilnorContext(poly("x", 1)), InputError);
}

TEST_CASE("multiplication matrices compose") {
  MilnorContext ctx(poly(testutil::kF1));
  for (int k = 3; k <= 12; ++k) {
    auto xy = ctx.multiplication_matrix(k, poly("x*y"));
    auto composed = ctx.variable_multiplication(k + 1, 1) * ctx.variable_multiplication(k, 0);
    CHECK(xy == composed);
  }
}

TEST_CASE("generic forms through a singular point are refused") {
  // singular at [0:3:-2], where x + 2y + 3z vanishes
  MilnorContext ctx(poly("-2*x*y^2 - 3*x*y*z"));
  auto w = default_hilbert_window(ctx);
  CHECK_FALSE(avoids_singular_points(ctx, generic_form_a(3)));
  CHECK(avoids_singular_points(ctx, generic_form_b(3)));
  CHECK_THROWS_AS(torsion_dims_generic(ctx, w, generic_form_a(3)), DiagnosticError);
  auto forms = checking_forms(ctx, 2);
  REQUIRE(forms.size() == 2);
  CHECK(forms[0] == generic_form_b(3));
  auto t = torsion_dims(ctx, w);
  for (const auto& ell : forms) CHECK(torsion_dims_generic(ctx, w, ell) == t);
  CHECK_NOTHROW(hilbert_row(ctx, w));
}

TEST_CASE("annihilator and generic-form torsion agree on random cubics") {
  std::mt19937_64 rng(31);
  int cases = 0;
  while (cases < 100) {
    auto f = testutil::random_homogeneous(rng, 3, 3, 3 + rng() % 3);
    if (f.is_zero() || f.degree() != 3) continue;
    std::unique_ptr<MilnorContext> ctx;
    try {
      ctx = std::make_unique<MilnorContext>(f);
    } catch (const InputError&) {
      continue;
    }
    if (!isolated_sing_check(*ctx)) continue;
    auto w = default_hilbert_window(*ctx);
    auto t = torsion_dims(*ctx, w);
    for (const auto& ell : checking_forms(*ctx, 2)) CHECK(torsion_dims_generic(*ctx, w, ell) == t);
    ++cases;
  }
}
