#pragma once

// Random instances for property checks (CLI `verify`, unit and acceptance tests).

#include <cstddef>
#include <cstdint>
#include <random>

#include "superchern/form.hpp"
#include "superchern/graded_matrix.hpp"
#include "superchern/poly.hpp"

namespace superchern::sampling {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eedc4e2ULL;

/// Seed from SUPERCHERN_SEED when set and parseable, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

struct PolyParams {
  unsigned max_degree = 2;
  std::size_t max_terms = 3;
  long max_numerator = 3;
  long max_denominator = 3;
};

Rational random_rational(Rng& rng, const PolyParams& params, bool nonzero = false);
Poly random_poly(Rng& rng, std::size_t n_vars, const PolyParams& params);
Poly random_nonzero_poly(Rng& rng, std::size_t n_vars, const PolyParams& params);

/// Form with components of the given degree only; each tuple is kept with probability `density`.
Form random_homogeneous_form(Rng& rng, std::size_t n_vars, unsigned degree, const PolyParams& params,
                             double density = 0.5);
Form random_form(Rng& rng, std::size_t n_vars, const PolyParams& params, double density = 0.4);

GradedShape random_shape(Rng& rng, std::size_t max_p = 2, std::size_t max_q = 2);

MatForm random_matform(Rng& rng, GradedShape shape, std::size_t n_vars, const PolyParams& params,
                       double density = 0.3);
MatForm random_homogeneous_matform(Rng& rng, GradedShape shape, std::size_t n_vars, Parity parity,
                                   const PolyParams& params, double density = 0.3);

enum class ZeroFormPart {
  none,      // every component has positive form degree
  constant,  // off-diagonal 0-form part with constant entries
};

/// Random odd A'. With ZeroFormPart::constant and q > 0, p > 0, the odd
/// 0-form block is filled with nonzero constants in [-max_constant, max_constant].
MatForm random_odd_a_prime(Rng& rng, GradedShape shape, std::size_t n_vars, const PolyParams& params,
                           ZeroFormPart zero_form = ZeroFormPart::none, double density = 0.3,
                           double max_constant = 2.0);

}  // namespace superchern::sampling
