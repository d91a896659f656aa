#include "superchern/kernels.hpp"

#include <cmath>

namespace superchern::kernels {

namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::fabs(x[i]);
    if (v > m) m = v;
  }
  return m;
}

double max_abs_diff_scalar(const double* x, const double* y, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::fabs(x[i] - y[i]);
    if (v > m) m = v;
  }
  return m;
}

// Row i of c accumulates (s * a[i][k]) * b[k][:] for k in order.
void gemm_acc_scalar(std::size_t m, double s, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * m;
    for (std::size_t k = 0; k < m; ++k) {
      const double aik = s * a[i * m + k];
      if (aik == 0.0) continue;
      const double* brow = b + k * m;
      for (std::size_t j = 0; j < m; ++j) crow[j] = crow[j] + aik * brow[j];
    }
  }
}

bool all_finite_scalar(const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x[i])) return false;
  }
  return true;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar,        axpy_scalar,     scale_scalar,
                                 max_abs_scalar,     max_abs_diff_scalar,
                                 gemm_acc_scalar,    all_finite_scalar};
  return table;
}

}  // namespace superchern::kernels
