// Compiled with -mavx2 -mfma; only entered after a runtime CPU check.
#include <immintrin.h>

#include <cmath>

#include "milnor/exactla/modp.hpp"

namespace milnor::exactla::modp {

namespace {

// r = a*x + y computed exactly (< 2^53); q = floor(r / p); r - q*p lands in
// [-p, 2p) because 1/p is rounded, so one correction step each way.
inline __m256d reduce_pd(__m256d r, __m256d p, __m256d pinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(r, pinv));
  r = _mm256_fnmadd_pd(q, p, r);
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, p));
  __m256d over = _mm256_cmp_pd(r, p, _CMP_GE_OQ);
  return _mm256_sub_pd(r, _mm256_and_pd(over, p));
}

inline double reduce_sd(double r, double p, double pinv) {
  double q = std::floor(r * pinv);
  r = std::fma(-q, p, r);
  if (r < 0) r += p;
  if (r >= p) r -= p;
  return r;
}

void axpy_avx2(std::span<double> y, std::span<const double> x, double a, double p) {
  const double pinv = 1.0 / p;
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(pinv);
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  const std::size_t n = y.size();
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y.data() + i);
    __m256d vx = _mm256_loadu_pd(x.data() + i);
    __m256d r = _mm256_fmadd_pd(va, vx, vy);
    _mm256_storeu_pd(y.data() + i, reduce_pd(r, vp, vpinv));
  }
  for (; i < n; ++i) y[i] = reduce_sd(std::fma(a, x[i], y[i]), p, pinv);
}

void scale_avx2(std::span<double> y, double a, double p) {
  const double pinv = 1.0 / p;
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(pinv);
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  const std::size_t n = y.size();
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y.data() + i);
    _mm256_storeu_pd(y.data() + i, reduce_pd(_mm256_mul_pd(va, vy), vp, vpinv));
  }
  for (; i < n; ++i) y[i] = reduce_sd(a * y[i], p, pinv);
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", &axpy_avx2, &scale_avx2};
  return &table;
}

}  // namespace milnor::exactla::modp
