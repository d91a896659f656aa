#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "superchern/graded_matrix.hpp"
#include "superchern/numeric_matrix.hpp"

namespace superchern {

/// A superconnection d + A' on the trivial bundle R^p + R^q over an n-dimensional chart.
///
/// A' = omega + A collects the connection form omega (block-diagonal 1-form part)
/// and the linear part A. Construction rejects an A' with a nonzero even part.
class Superconnection {
 public:
  explicit Superconnection(MatForm a_prime);

  const GradedShape& shape() const noexcept { return a_prime_.shape(); }
  std::size_t n_vars() const noexcept { return a_prime_.n_vars(); }
  const MatForm& a_prime() const noexcept { return a_prime_; }

  /// Degree-1 part of the diagonal blocks.
  MatForm omega() const;
  /// A' - omega.
  MatForm linear_part() const;

 private:
  MatForm a_prime_;
};

/// Sum the exponential series exactly; requires a nilpotent argument.
struct ExactSeries {
  std::size_t max_order = 64;
};

/// Evaluate at a point, then exponentiate numerically by scaling and squaring.
struct NumericAtPoint {
  std::vector<double> point;
  double tolerance = 1e-12;
};

using ExpMode = std::variant<ExactSeries, NumericAtPoint>;

/// A'-curvature: d(A') + A' A'.
MatForm curvature(const Superconnection& s);

/// floor(n/2) + 1 + (p+q): search limit for nilpotency.
std::size_t nilpotency_bound(const MatForm& m);

/// Smallest K <= nilpotency_bound(m) with m^K = 0, or nullopt.
std::optional<std::size_t> nilpotency_index(const MatForm& m);

/// exp(-m) as the terminating series sum_{k<K} (-1)^k m^k / k!.
MatForm exp_neg(const MatForm& m, const ExactSeries& mode);

/// exp(-m(point)) in Lambda(R^n) (x) M_{p+q}(R).
NumericMat exp_neg(const MatForm& m, const NumericAtPoint& mode);

/// exp(-m) for an already evaluated element. Scaling keeps the max-coordinate
/// norm of the scaled argument at or below 1/2; the Taylor sum stops once a
/// term falls below the (scaled) tolerance.
NumericMat exp_neg(const NumericMat& m, double tolerance);

/// Chern character form str(exp(-curvature)).
Form chern_character(const Superconnection& s, const ExactSeries& mode);
NumericExterior chern_character(const Superconnection& s, const NumericAtPoint& mode);
std::variant<Form, NumericExterior> chern_character(const Superconnection& s, const ExpMode& mode);

/// d(F) + A'F - FA' for F = curvature(s); zero for every superconnection.
MatForm bianchi_residual(const Superconnection& s);

}  // namespace superchern
