#pragma once

// Dense double-precision kernels behind the numeric algebra.
//
// Every kernel has a scalar reference implementation; AVX2 (x86-64) and NEON
// (aarch64) variants are compiled when the target supports them and chosen at
// runtime. Variants use the same accumulation order as the reference and never
// contract to FMA, so results are bit-identical across variants.

#include <cstddef>
#include <span>
#include <string_view>

namespace superchern::kernels {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x *= a
  void (*scale)(double a, double* x, std::size_t n);
  // max_i |x_i|; 0 for n == 0
  double (*max_abs)(const double* x, std::size_t n);
  // max_i |x_i - y_i|
  double (*max_abs_diff)(const double* x, const double* y, std::size_t n);
  // c += s * a * b for row-major m x m blocks
  void (*gemm_acc)(std::size_t m, double s, const double* a, const double* b, double* c);
  bool (*all_finite)(const double* x, std::size_t n);
};

const KernelTable& scalar_table();
#if defined(SUPERCHERN_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(SUPERCHERN_HAVE_NEON)
const KernelTable& neon_table();
#endif

bool isa_supported(Isa isa);

/// Table used by the numeric algebra. Defaults to the best supported ISA;
/// SUPERCHERN_KERNELS=scalar|avx2|neon overrides it at first use.
const KernelTable& active();

/// Switches the active table; throws if the ISA is not available on this host.
void select(Isa isa);

std::string_view name(Isa isa);

// Convenience wrappers over the active table.
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), y.size());
}
inline void scale(double a, std::span<double> x) { active().scale(a, x.data(), x.size()); }
inline double max_abs(std::span<const double> x) { return active().max_abs(x.data(), x.size()); }
inline double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  return active().max_abs_diff(x.data(), y.data(), x.size());
}
inline bool all_finite(std::span<const double> x) { return active().all_finite(x.data(), x.size()); }

}  // namespace superchern::kernels
