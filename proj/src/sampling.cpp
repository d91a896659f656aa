#include "superchern/sampling.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace superchern::sampling {

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Form homogeneous_part(Rng& rng, std::size_t n, Parity wanted_degree_parity, unsigned min_degree,
                      const PolyParams& params, double density) {
  Form out(n);
  const Mask full = static_cast<Mask>((Mask{1} << n) - 1);
  for (Mask m = 0; m <= full; ++m) {
    const unsigned deg = mask_degree(m);
    if (deg < min_degree) continue;
    if (static_cast<Parity>(deg & 1u) != wanted_degree_parity) continue;
    if (!coin(rng, density)) continue;
    out.add_component(m, random_nonzero_poly(rng, n, params));
  }
  return out;
}

}  // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("SUPERCHERN_SEED");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 0);
  return (end != nullptr && *end == '\0') ? static_cast<std::uint64_t>(v) : fallback;
}

Rational random_rational(Rng& rng, const PolyParams& params, bool nonzero) {
  std::uniform_int_distribution<long> num(-params.max_numerator, params.max_numerator);
  std::uniform_int_distribution<long> den(1, params.max_denominator);
  long a = num(rng);
  while (nonzero && a == 0) a = num(rng);
  return make_rational(a, den(rng));
}

Poly random_poly(Rng& rng, std::size_t n_vars, const PolyParams& params) {
  Poly p(n_vars);
  std::uniform_int_distribution<std::size_t> term_count(0, params.max_terms);
  std::uniform_int_distribution<unsigned> degree(0, params.max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n_vars == 0 ? 0 : n_vars - 1);
  const std::size_t terms = term_count(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    Poly::Exponents e(n_vars, 0);
    const unsigned deg = n_vars == 0 ? 0 : degree(rng);
    for (unsigned k = 0; k < deg; ++k) ++e[var(rng)];
    p.add_term(e, random_rational(rng, params, true));
  }
  return p;
}

Poly random_nonzero_poly(Rng& rng, std::size_t n_vars, const PolyParams& params) {
  for (;;) {
    Poly p = random_poly(rng, n_vars, params);
    if (!p.is_zero()) return p;
  }
}

Form random_homogeneous_form(Rng& rng, std::size_t n_vars, unsigned degree, const PolyParams& params,
                             double density) {
  Form out(n_vars);
  const Mask full = static_cast<Mask>((Mask{1} << n_vars) - 1);
  for (Mask m = 0; m <= full; ++m) {
    if (mask_degree(m) != degree || !coin(rng, density)) continue;
    out.add_component(m, random_nonzero_poly(rng, n_vars, params));
  }
  return out;
}

Form random_form(Rng& rng, std::size_t n_vars, const PolyParams& params, double density) {
  Form out(n_vars);
  const Mask full = static_cast<Mask>((Mask{1} << n_vars) - 1);
  for (Mask m = 0; m <= full; ++m) {
    if (coin(rng, density)) out.add_component(m, random_nonzero_poly(rng, n_vars, params));
  }
  return out;
}

GradedShape random_shape(Rng& rng, std::size_t max_p, std::size_t max_q) {
  std::uniform_int_distribution<std::size_t> p(0, max_p);
  std::uniform_int_distribution<std::size_t> q(0, max_q);
  for (;;) {
    const std::size_t pp = p(rng);
    const std::size_t qq = q(rng);
    if (pp + qq > 0) return GradedShape(pp, qq);
  }
}

MatForm random_matform(Rng& rng, GradedShape shape, std::size_t n_vars, const PolyParams& params,
                       double density) {
  MatForm out(shape, n_vars);
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (std::size_t j = 0; j < shape.size(); ++j) out.set(i, j, random_form(rng, n_vars, params, density));
  }
  return out;
}

MatForm random_homogeneous_matform(Rng& rng, GradedShape shape, std::size_t n_vars, Parity parity,
                                   const PolyParams& params, double density) {
  MatForm out(shape, n_vars);
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (std::size_t j = 0; j < shape.size(); ++j) {
      const Parity degree_parity = parity + shape.block_parity(i, j);
      out.set(i, j, homogeneous_part(rng, n_vars, degree_parity, 0, params, density));
    }
  }
  return out;
}

MatForm random_odd_a_prime(Rng& rng, GradedShape shape, std::size_t n_vars, const PolyParams& params,
                           ZeroFormPart zero_form, double density, double max_constant) {
  MatForm out(shape, n_vars);
  std::uniform_real_distribution<double> magnitude(0.5, max_constant);
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (std::size_t j = 0; j < shape.size(); ++j) {
      const Parity degree_parity = Parity::odd + shape.block_parity(i, j);
      Form entry = homogeneous_part(rng, n_vars, degree_parity, 1, params, density);
      if (zero_form == ZeroFormPart::constant && shape.block_parity(i, j) == Parity::odd) {
        // Constants on a 1/8 grid keep the exact arithmetic readable.
        const double v = magnitude(rng) * (coin(rng, 0.5) ? 1.0 : -1.0);
        entry += Form::constant(n_vars, make_rational(std::lround(v * 8), 8));
      }
      out.set(i, j, std::move(entry));
    }
  }
  return out;
}

}  // namespace superchern::sampling
