#include "milnor/exactla/modp.hpp"

#include <cstdlib>
#include <cstring>

#include "milnor/errors.hpp"

namespace milnor::exactla::modp {

#ifndef MILNOR_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

const KernelTable& active_kernels() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* force = std::getenv("MILNOR_SIMD");
    if (force && std::strcmp(force, "scalar") == 0) return scalar_kernels();
#if defined(__x86_64__) || defined(__i386__)
    if (const KernelTable* t = avx2_kernels();
        t && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
      return *t;
#endif
    return scalar_kernels();
  }();
  return chosen;
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw InputError("modp: inverse of zero");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(const Rational& q, std::uint32_t p) {
  Integer num, den;
  mpz_fdiv_r_ui(num.get_mpz_t(), q.get_num_mpz_t(), p);
  mpz_fdiv_r_ui(den.get_mpz_t(), q.get_den_mpz_t(), p);
  if (den == 0) throw InputError("modp: denominator divisible by the prime");
  auto n = static_cast<std::uint64_t>(num.get_ui());
  return static_cast<std::uint32_t>((n * inverse(static_cast<std::uint32_t>(den.get_ui()), p)) % p);
}

std::size_t rank(std::size_t rows, const std::vector<SparseVec>& columns, std::uint32_t p,
                 const KernelTable& kernels) {
  // Eliminate with the columns as dense rows of length `rows`.
  const double pd = static_cast<double>(p);
  std::vector<std::vector<double>> basis;  // normalized, pivot = first nonzero
  std::vector<std::ptrdiff_t> pivot_of(rows, -1);
  std::vector<double> work(rows);
  for (const auto& col : columns) {
    std::fill(work.begin(), work.end(), 0.0);
    for (const auto& e : col) {
      if (e.index >= rows) throw InputError("modp::rank: index out of range");
      work[e.index] = static_cast<double>(reduce(e.value, p));
    }
    for (std::size_t c = 0; c < rows; ++c) {
      if (work[c] == 0.0) continue;
      auto b = pivot_of[c];
      if (b < 0) {
        double inv = static_cast<double>(inverse(static_cast<std::uint32_t>(work[c]), p));
        kernels.scale(work, inv, pd);
        pivot_of[c] = static_cast<std::ptrdiff_t>(basis.size());
        basis.push_back(work);
        break;
      }
      double a = pd - work[c];  // subtract work[c] * basis row
      const auto& row = basis[static_cast<std::size_t>(b)];
      kernels.axpy(std::span<double>(work).subspan(c), std::span<const double>(row).subspan(c), a, pd);
    }
  }
  return basis.size();
}

std::size_t rank(const RationalMatrix& m, std::uint32_t p, const KernelTable& kernels) {
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.sparse_column(c));
  return rank(m.rows(), cols, p, kernels);
}

}  // namespace milnor::exactla::modp
