#include "superchern/kernels.hpp"

#include <arm_neon.h>

#include <cmath>

namespace superchern::kernels {

namespace {

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t prod = vmulq_f64(va, vld1q_f64(x + i));
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), prod));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_neon(double a, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), va));
  for (; i < n; ++i) x[i] *= a;
}

double max_abs_neon(const double* x, std::size_t n) {
  float64x2_t vm = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vm = vmaxq_f64(vm, vabsq_f64(vld1q_f64(x + i)));
  double m = vmaxvq_f64(vm);
  for (; i < n; ++i) {
    const double v = std::fabs(x[i]);
    if (v > m) m = v;
  }
  return m;
}

double max_abs_diff_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t vm = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vm = vmaxq_f64(vm, vabsq_f64(vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i))));
  }
  double m = vmaxvq_f64(vm);
  for (; i < n; ++i) {
    const double v = std::fabs(x[i] - y[i]);
    if (v > m) m = v;
  }
  return m;
}

void gemm_acc_neon(std::size_t m, double s, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * m;
    for (std::size_t k = 0; k < m; ++k) {
      const double aik = s * a[i * m + k];
      if (aik == 0.0) continue;
      axpy_neon(aik, b + k * m, crow, m);
    }
  }
}

bool all_finite_neon(const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x[i])) return false;
  }
  return true;
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{Isa::neon,       axpy_neon,         scale_neon,
                                 max_abs_neon,    max_abs_diff_neon, gemm_acc_neon,
                                 all_finite_neon};
  return table;
}

}  // namespace superchern::kernels
