#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace superchern {

/// A strictly increasing index tuple I of dx-factors, stored as a bitmask
/// (bit i set iff dx_{i+1} occurs). Strict increase is automatic.
using Mask = std::uint32_t;

// Largest chart dimension supported; numeric elements have 2^n coordinates.
inline constexpr std::size_t kMaxVars = 16;

inline unsigned mask_degree(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

inline std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_from_indices(const std::vector<std::size_t>& indices) {
  Mask m = 0;
  for (auto i : indices) m |= Mask{1} << i;
  return m;
}

/// Sign of the permutation sorting the concatenation I.J, or 0 when I and J
/// overlap. Counts inversions with one merge over the two sorted tuples.
inline int wedge_sign(Mask i, Mask j) {
  if ((i & j) != 0) return 0;
  unsigned inversions = 0;
  unsigned pending_from_i = mask_degree(i);
  // Walk indices ascending; each J index jumps over every I index still above it.
  for (Mask rest = i | j; rest != 0; rest &= rest - 1) {
    const Mask bit = rest & (~rest + 1);
    if ((i & bit) != 0) {
      --pending_from_i;
    } else {
      inversions += pending_from_i;
    }
  }
  return (inversions & 1u) ? -1 : 1;
}

// (-1)^k
inline int parity_sign(unsigned k) { return (k & 1u) ? -1 : 1; }

}  // namespace superchern
