#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superchern/graded_matrix.hpp"
#include "superchern/numeric_matrix.hpp"
#include "superchern/superconnection.hpp"
#include "superchern/superpath.hpp"

namespace superchern {

/// Even equations obtained from the theta-expansion of the transport equation:
///   psi1 - A' psi0 = 0
///   d/dt psi0 + G psi0 = 0,   G = dA' + A'A'
struct TransportSystem {
  MatForm constraint_coeff;  // A'
  MatForm generator;         // G
  MatForm d_a_prime;         // dA'
};

TransportSystem reduce_to_system(const Superconnection& s);

/// theta^0 and theta^1 components of D psi - X psi for psi = psi0 + theta psi1.
template <class T>
struct Residual {
  T constraint;  // psi1 - A' psi0
  T ode;         // d/dt psi0 + A' psi1 + (dA') psi0
};

/// Residual of the unreduced equation, computed from the theta-expansion of
/// (d_theta + theta d_t)(psi0 + theta psi1) - (A' - theta dA')(psi0 + theta psi1).
template <class T>
Residual<T> raw_residual(const ThetaPair<T>& coefficient, const T& psi0, const T& psi1,
                         const T& dpsi0_dt) {
  const ThetaPair<T> d_psi{psi1, dpsi0_dt};
  const ThetaPair<T> r = d_psi - theta_mul(coefficient, ThetaPair<T>{psi0, psi1});
  return {r.body, r.soul};
}

Residual<MatForm> raw_residual(const Superconnection& s, const MatForm& psi0, const MatForm& psi1,
                               const MatForm& dpsi0_dt);
Residual<NumericMat> raw_residual(const Superconnection& s, std::span<const double> point,
                                  const NumericMat& psi0, const NumericMat& psi1,
                                  const NumericMat& dpsi0_dt);

/// psi0(t) = sum_{k<K} (-t)^k G^k / k!, exact; G must be nilpotent.
MatForm solve_exact(const TransportSystem& sys, const Rational& t);

/// Termwise t-derivative of the series in solve_exact.
MatForm solve_exact_time_derivative(const TransportSystem& sys, const Rational& t);

/// psi1 = A' psi0.
MatForm constrained_soul(const TransportSystem& sys, const MatForm& psi0);

struct SuperSectionTrajectory {
  std::vector<double> times;  // uniform grid, 0 .. 1
  std::vector<NumericMat> psi0;
  std::vector<NumericMat> psi1;
};

/// Classical RK4 for psi0' = -G psi0 from psi0(0) = id on [0, 1] at a point.
/// The step must divide 1 evenly.
SuperSectionTrajectory solve_rk4(const TransportSystem& sys, std::span<const double> point, double h);

/// Number of uniform steps for h; throws UsageError if h does not divide 1.
std::size_t steps_for(double h);

struct NumericTransport {
  std::vector<double> point;
  double step = 1e-3;
  double exp_tolerance = 1e-12;
};

using TransportMode = std::variant<ExactSeries, NumericTransport>;

struct TransportTolerances {
  double terminal = 1e-8;
  double ch = 1e-8;
  double residual_constraint = 1e-10;
  double residual_ode = 1e-6;
};

struct TransportReport {
  std::string mode;  // "exact" or "numeric"
  double residual_constraint = 0.0;
  double residual_ode = 0.0;
  double terminal_gap = 0.0;
  double ch_gap = 0.0;
  double h = 0.0;
  std::vector<double> point;
  bool passed = false;
  // Exact mode only: symbolic differences psi0(1) - exp(-F) and str psi0(1) - ch.
  std::optional<MatForm> terminal_difference;
  std::optional<Form> ch_difference;
};

/// Solves the transport system and compares psi0(1) with exp(-curvature) and
/// its supertrace with the Chern character. Exact mode passes only on exact
/// equality; numeric mode against the tolerances.
TransportReport verify_theorem(const Superconnection& s, const TransportMode& mode,
                               const TransportTolerances& tolerances = {});

/// Same, with a caller-supplied system (e.g. a deliberately corrupted one).
TransportReport verify_theorem(const Superconnection& s, const TransportSystem& sys,
                               const TransportMode& mode, const TransportTolerances& tolerances = {});

// Largest |coefficient| over all entries, as a double.
double max_coefficient(const MatForm& a);
double max_coefficient(const Form& a);

}  // namespace superchern
