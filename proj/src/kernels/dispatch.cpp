#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "superchern/kernels.hpp"

namespace superchern::kernels {

namespace {

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_table();
    case Isa::avx2:
#if defined(SUPERCHERN_HAVE_AVX2)
      return &avx2_table();
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(SUPERCHERN_HAVE_NEON)
      return &neon_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* initial_table() {
  if (const char* forced = std::getenv("SUPERCHERN_KERNELS")) {
    const std::string want = forced;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == name(isa) && isa_supported(isa)) return table_for(isa);
    }
  }
  if (isa_supported(Isa::avx2)) return table_for(Isa::avx2);
  if (isa_supported(Isa::neon)) return table_for(Isa::neon);
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(SUPERCHERN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(SUPERCHERN_HAVE_NEON)
      return true;  // Advanced SIMD is mandatory on aarch64.
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::runtime_error("kernel ISA not supported on this host: " + std::string(name(isa)));
  }
  current().store(table_for(isa), std::memory_order_release);
}

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace superchern::kernels
