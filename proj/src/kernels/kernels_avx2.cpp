// Compiled with -mavx2 only (no -mfma); see kernels.hpp for the bit-exactness contract.
#include "superchern/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace superchern::kernels {

namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_avx2(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
  for (; i < n; ++i) x[i] *= a;
}

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline double hmax(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  double m = lanes[0];
  for (int k = 1; k < 4; ++k) {
    if (lanes[k] > m) m = lanes[k];
  }
  return m;
}

double max_abs_avx2(const double* x, std::size_t n) {
  __m256d vm = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, abs_pd(_mm256_loadu_pd(x + i)));
  double m = hmax(vm);
  for (; i < n; ++i) {
    const double v = std::fabs(x[i]);
    if (v > m) m = v;
  }
  return m;
}

double max_abs_diff_avx2(const double* x, const double* y, std::size_t n) {
  __m256d vm = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    vm = _mm256_max_pd(vm, abs_pd(d));
  }
  double m = hmax(vm);
  for (; i < n; ++i) {
    const double v = std::fabs(x[i] - y[i]);
    if (v > m) m = v;
  }
  return m;
}

void gemm_acc_avx2(std::size_t m, double s, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * m;
    for (std::size_t k = 0; k < m; ++k) {
      const double aik = s * a[i * m + k];
      if (aik == 0.0) continue;
      axpy_avx2(aik, b + k * m, crow, m);
    }
  }
}

bool all_finite_avx2(const double* x, std::size_t n) {
  // x - x is NaN exactly when x is Inf or NaN.
  std::size_t i = 0;
  __m256d bad = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d z = _mm256_sub_pd(v, v);
    bad = _mm256_or_pd(bad, _mm256_cmp_pd(z, z, _CMP_UNORD_Q));
  }
  if (_mm256_movemask_pd(bad) != 0) return false;
  for (; i < n; ++i) {
    if (!std::isfinite(x[i])) return false;
  }
  return true;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::avx2,       axpy_avx2,         scale_avx2,
                                 max_abs_avx2,    max_abs_diff_avx2, gemm_acc_avx2,
                                 all_finite_avx2};
  return table;
}

}  // namespace superchern::kernels
