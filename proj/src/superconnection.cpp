#include "superchern/superconnection.hpp"

#include <cmath>

#include "superchern/errors.hpp"

namespace superchern {

namespace {

void validate(const ExactSeries& mode) {
  if (mode.max_order < 1) throw std::invalid_argument("ExactSeries max_order must be >= 1");
}

void validate(const NumericAtPoint& mode, std::size_t n_vars) {
  if (!(mode.tolerance > 0.0)) throw std::invalid_argument("numeric tolerance must be positive");
  if (mode.point.size() != n_vars) {
    throw DimensionError("point has " + std::to_string(mode.point.size()) +
                         " coordinates, expected " + std::to_string(n_vars));
  }
}

// m^0 .. m^{K-1} where m^K = 0, or nullopt if K exceeds the bound.
std::optional<std::vector<MatForm>> powers_until_zero(const MatForm& m, std::size_t bound) {
  std::vector<MatForm> powers{MatForm::identity(m.shape(), m.n_vars())};
  if (m.is_zero()) return powers;
  for (std::size_t k = 1; k <= bound; ++k) {
    MatForm next = powers.back() * m;
    if (next.is_zero()) return powers;
    powers.push_back(std::move(next));
  }
  return std::nullopt;
}

}  // namespace

Superconnection::Superconnection(MatForm a_prime) : a_prime_(std::move(a_prime)) {
  if (!parity_decompose(a_prime_).even.is_zero()) throw InvariantError("A' must be odd");
}

MatForm Superconnection::omega() const {
  MatForm out(shape(), n_vars());
  for (std::size_t i = 0; i < shape().size(); ++i) {
    for (std::size_t j = 0; j < shape().size(); ++j) {
      if (shape().block_parity(i, j) == Parity::even) out.set(i, j, a_prime_(i, j).degree_component(1));
    }
  }
  return out;
}

MatForm Superconnection::linear_part() const { return a_prime_ - omega(); }

MatForm curvature(const Superconnection& s) { return d(s.a_prime()) + s.a_prime() * s.a_prime(); }

std::size_t nilpotency_bound(const MatForm& m) { return m.n_vars() / 2 + 1 + m.size(); }

std::optional<std::size_t> nilpotency_index(const MatForm& m) {
  auto powers = powers_until_zero(m, nilpotency_bound(m));
  if (!powers) return std::nullopt;
  return powers->size();
}

MatForm exp_neg(const MatForm& m, const ExactSeries& mode) {
  validate(mode);
  auto powers = powers_until_zero(m, nilpotency_bound(m));
  if (!powers) {
    throw NotNilpotentError("matrix is not nilpotent within " + std::to_string(nilpotency_bound(m)) +
                            " powers; the exact exponential series does not terminate (use numeric mode)");
  }
  if (powers->size() > mode.max_order) {
    throw NotNilpotentError("exponential series needs " + std::to_string(powers->size()) +
                            " terms, more than max_order " + std::to_string(mode.max_order));
  }
  MatForm out(m.shape(), m.n_vars());
  for (std::size_t k = 0; k < powers->size(); ++k) {
    Rational c = Rational(1) / factorial(static_cast<unsigned>(k));
    if (k & 1u) c = -c;
    out += (*powers)[k].scaled(c);
  }
  return out;
}

NumericMat exp_neg(const NumericMat& m, double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("numeric tolerance must be positive");
  if (!all_finite(m)) throw NumericError("non-finite entries in exponential argument");

  NumericMat x = m;
  x.scale(-1.0);
  const double norm = max_abs(x);
  int squarings = 0;
  while (std::ldexp(norm, -squarings) > 0.5) ++squarings;
  x.scale(std::ldexp(1.0, -squarings));

  const double term_tolerance = std::ldexp(tolerance, -squarings);
  NumericMat sum = NumericMat::identity(m.shape(), m.n_vars());
  NumericMat term = sum;
  constexpr int kMaxTerms = 200;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * x;
    term.scale(1.0 / k);
    sum += term;
    if (max_abs(term) <= term_tolerance) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  if (!all_finite(sum)) throw NumericError("exponential overflowed");
  return sum;
}

NumericMat exp_neg(const MatForm& m, const NumericAtPoint& mode) {
  validate(mode, m.n_vars());
  return exp_neg(eval(m, mode.point), mode.tolerance);
}

Form chern_character(const Superconnection& s, const ExactSeries& mode) {
  return supertrace(exp_neg(curvature(s), mode));
}

NumericExterior chern_character(const Superconnection& s, const NumericAtPoint& mode) {
  return supertrace(exp_neg(curvature(s), mode));
}

std::variant<Form, NumericExterior> chern_character(const Superconnection& s, const ExpMode& mode) {
  return std::visit(
      [&](const auto& m) -> std::variant<Form, NumericExterior> { return chern_character(s, m); }, mode);
}

MatForm bianchi_residual(const Superconnection& s) {
  const MatForm f = curvature(s);
  return d(f) + s.a_prime() * f - f * s.a_prime();
}

}  // namespace superchern
