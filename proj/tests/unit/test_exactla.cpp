#include <doctest.h>

#include <random>

#include "milnor/errors.hpp"
#include "milnor/exactla/matrix.hpp"
#include "milnor/exactla/modp.hpp"
#include "milnor/exactla/sparse.hpp"

using namespace milnor;
using namespace milnor::exactla;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density_pct = 60) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (static_cast<int>(rng() % 100) < density_pct) m(r, c) = Rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c).canonicalize();
  return m;
}

// Low-rank matrix: product of random rows x k and k x cols factors.
RationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  return random_matrix(rng, rows, k, 80) * random_matrix(rng, k, cols, 80);
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(frac(Rational(-3, 2)) == Rational(1, 2));
  CHECK(frac(Rational(7, 5)) == Rational(2, 5));
}

TEST_CASE("sparse helpers") {
  SparseVec a{{0, 1}, {3, 2}};
  SparseVec b{{3, -1}, {4, 5}};
  auto s = sparse_add(a, b, 2);
  CHECK(sparse_to_dense(s, 5) == Vector{1, 0, 0, 0, 10});
  CHECK(sparse_from_dense(Vector{0, 2, 0}).size() == 1);
  CHECK(sparse_scale(a, 0).empty());
  CHECK(sparse_is_valid(a, 4));
  CHECK_FALSE(sparse_is_valid(a, 3));
  CHECK_FALSE(sparse_is_valid(SparseVec{{1, 1}, {0, 1}}, 3));
  CHECK_FALSE(sparse_is_valid(SparseVec{{1, 0}}, 3));
}

TEST_CASE("rref, rank and kernel on a fixed matrix") {
  RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  std::vector<std::size_t> piv;
  auto r = rref(m, &piv);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(rank(m) == 2);
  auto k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.basis_vector(0) == Vector{-1, -1, 1});
  CHECK(solve(m, Vector{1, 2, 1}).has_value());
  CHECK_FALSE(solve(m, Vector{1, 0, 0}).has_value());
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    auto m = (t % 2) ? random_matrix(rng, rows, cols) : random_low_rank(rng, rows, cols, 1 + rng() % 3);
    auto k = kernel_basis(m);
    CHECK(rank(m) + k.dim() == cols);
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero_vector(m.apply(k.basis_vector(i))));
    CHECK(rank(m) == rank(m.transpose()));
    // solve finds a preimage of anything in the column space
    Vector x(cols);
    for (auto& v : x) v = static_cast<long>(rng() % 5) - 2;
    auto b = m.apply(x);
    auto y = solve(m, b);
    REQUIRE(y.has_value());
    CHECK(m.apply(*y) == b);
  }
}

TEST_CASE("subspace intersection and sum") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 5;
    auto gen = [&](std::size_t k) {
      std::vector<Vector> cols;
      for (std::size_t i = 0; i < k; ++i) {
        Vector v(n);
        for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
        cols.push_back(v);
      }
      return Subspace(n, cols);
    };
    auto a = gen(rng() % (n + 1));
    auto b = gen(rng() % (n + 1));
    auto s = subspace_sum(a, b);
    auto i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    for (std::size_t j = 0; j < i.dim(); ++j) {
      CHECK(membership(i.basis_vector(j), a));
      CHECK(membership(i.basis_vector(j), b));
    }
  }
}

TEST_CASE("sparse echelon agrees with dense rank and records dependencies") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 120; ++t) {
    const std::size_t rows = 2 + rng() % 8, cols = 1 + rng() % 9;
    auto m = random_low_rank(rng, rows, cols, 1 + rng() % 4);
    for (auto mode : {SparseEchelon::TagMode::eager, SparseEchelon::TagMode::deferred}) {
      SparseEchelon e(rows, cols, mode);
      for (std::size_t j = 0; j < cols; ++j) {
        auto dep = e.insert(m.sparse_column(j), sparse_unit(j));
        if (!dep) continue;
        // the dependency is a kernel vector of m
        CHECK(is_zero_vector(m.apply(sparse_to_dense(*dep, cols))));
        CHECK_FALSE(dep->empty());
      }
      CHECK(e.rank() == rank(m));
      CHECK(e.pivot_columns().size() + e.free_columns().size() == rows);
      // tags of a reduction express the reduced part through the inserted columns
      Vector x(cols);
      for (auto& v : x) v = static_cast<long>(rng() % 5) - 2;
      auto b = m.apply(x);
      auto red = e.reduce(sparse_from_dense(b));
      CHECK(red.remainder.empty());
      CHECK(m.apply(sparse_to_dense(red.tag, cols)) == b);
    }
  }
}

TEST_CASE("deferred and eager tags give identical results") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 3 + rng() % 6, cols = 2 + rng() % 8;
    auto m = random_low_rank(rng, rows, cols, 1 + rng() % 4);
    SparseEchelon eager(rows, cols, SparseEchelon::TagMode::eager);
    SparseEchelon deferred(rows, cols, SparseEchelon::TagMode::deferred);
    for (std::size_t j = 0; j < cols; ++j) {
      auto a = eager.insert(m.sparse_column(j), sparse_unit(j));
      auto b = deferred.insert(m.sparse_column(j), sparse_unit(j));
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(sparse_to_dense(*a, cols) == sparse_to_dense(*b, cols));
    }
    Vector v(rows);
    for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
    auto ra = eager.reduce(sparse_from_dense(v));
    auto rb = deferred.reduce(sparse_from_dense(v));
    CHECK(sparse_to_dense(ra.remainder, rows) == sparse_to_dense(rb.remainder, rows));
    CHECK(sparse_to_dense(ra.tag, cols) == sparse_to_dense(rb.tag, cols));
  }
}

TEST_CASE("quotient coordinates vanish exactly on the span") {
  SparseEchelon e(3);
  e.insert(SparseVec{{0, 1}, {1, 1}});
  CHECK(e.quotient_coordinates(SparseVec{{0, 2}, {1, 2}}) == Vector{0, 0});
  CHECK(e.quotient_coordinates(SparseVec{{0, 1}}) == Vector{-1, 0});
  CHECK_THROWS_AS(e.reduce(SparseVec{{3, 1}}), InputError);
}

TEST_CASE("mod p rank matches exact rank") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 150; ++t) {
    const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
    auto m = random_low_rank(rng, rows, cols, 1 + rng() % 5);
    CHECK(modp::rank(m) == rank(m));
    CHECK(modp::rank(m, modp::kDefaultPrime, modp::scalar_kernels()) == rank(m));
  }
  CHECK(modp::inverse(3, 7) == 5);
  CHECK(modp::reduce(Rational(1, 2), 7) == 4);
  CHECK(modp::reduce(Rational(-1), 7) == 6);
}

TEST_CASE("AVX2 kernels match the scalar reference bit for bit") {
  const auto* simd = modp::avx2_kernels();
  if (!simd) {
    MESSAGE("built without AVX2 kernels");
    return;
  }
  const double p = modp::kDefaultPrime;
  std::mt19937_64 rng(55);
  for (int t = 0; t < 200; ++t) {
    const std::size_t len = rng() % 67;
    std::vector<double> x(len), y(len);
    for (auto& v : x) v = static_cast<double>(rng() % modp::kDefaultPrime);
    for (auto& v : y) v = static_cast<double>(rng() % modp::kDefaultPrime);
    const double a = static_cast<double>(rng() % modp::kDefaultPrime);
    auto y1 = y, y2 = y;
    modp::scalar_kernels().axpy(y1, x, a, p);
    simd->axpy(y2, x, a, p);
    CHECK(y1 == y2);
    auto z1 = y, z2 = y;
    modp::scalar_kernels().scale(z1, a, p);
    simd->scale(z2, a, p);
    CHECK(z1 == z2);
  }
  std::mt19937_64 rng2(56);
  for (int t = 0; t < 50; ++t) {
    auto m = random_low_rank(rng2, 12, 12, 1 + rng2() % 10);
    CHECK(modp::rank(m, modp::kDefaultPrime, *simd) == modp::rank(m, modp::kDefaultPrime, modp::scalar_kernels()));
  }
}
