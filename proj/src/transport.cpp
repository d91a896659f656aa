#include "superchern/transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "superchern/errors.hpp"

namespace superchern {

namespace {

// G^0 .. G^{K-1}.
std::vector<MatForm> generator_powers(const MatForm& g) {
  std::vector<MatForm> powers{MatForm::identity(g.shape(), g.n_vars())};
  const std::size_t bound = nilpotency_bound(g);
  for (std::size_t k = 1; k <= bound; ++k) {
    MatForm next = powers.back() * g;
    if (next.is_zero()) return powers;
    powers.push_back(std::move(next));
  }
  throw NotNilpotentError("transport generator is not nilpotent within " + std::to_string(bound) +
                          " powers; use numeric mode");
}

Rational rational_pow(const Rational& base, std::size_t k) {
  Rational out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= base;
  return out;
}

// d/dt at grid point k from uniformly spaced samples.
NumericMat time_derivative(const std::vector<NumericMat>& y, std::size_t k, double h) {
  const std::size_t last = y.size() - 1;
  NumericMat out(y[k].shape(), y[k].n_vars());
  // Stencils written as weighted differences y[idx] - y[k], so constant
  // trajectories differentiate to exactly zero.
  auto add = [&](std::size_t idx, double w) { out.add_scaled(w, y[idx] - y[k]); };
  if (last < 4) {
    // Too few samples for the fourth-order stencils.
    if (k < last) {
      add(k + 1, 1.0 / h);
    } else {
      add(k - 1, -1.0 / h);
    }
    return out;
  }
  const double c = 1.0 / (12.0 * h);
  if (k >= 2 && k + 2 <= last) {
    add(k - 2, c);
    add(k - 1, -8.0 * c);
    add(k + 1, 8.0 * c);
    add(k + 2, -c);
  } else if (k < 2) {
    add(k + 1, 48.0 * c);
    add(k + 2, -36.0 * c);
    add(k + 3, 16.0 * c);
    add(k + 4, -3.0 * c);
  } else {
    add(k - 1, -48.0 * c);
    add(k - 2, 36.0 * c);
    add(k - 3, -16.0 * c);
    add(k - 4, 3.0 * c);
  }
  return out;
}

TransportReport verify_exact(const Superconnection& s, const TransportSystem& sys) {
  TransportReport report;
  report.mode = "exact";

  const std::vector<Rational> grid{Rational(0), make_rational(1, 4), make_rational(1, 2), make_rational(3, 4),
                                   Rational(1)};
  bool residuals_zero = true;
  for (const auto& t : grid) {
    const MatForm psi0 = solve_exact(sys, t);
    const MatForm psi1 = constrained_soul(sys, psi0);
    const auto r = raw_residual(s, psi0, psi1, solve_exact_time_derivative(sys, t));
    report.residual_constraint = std::max(report.residual_constraint, max_coefficient(r.constraint));
    report.residual_ode = std::max(report.residual_ode, max_coefficient(r.ode));
    residuals_zero = residuals_zero && r.constraint.is_zero() && r.ode.is_zero();
  }

  const MatForm terminal = solve_exact(sys, Rational(1));
  MatForm diff = terminal - exp_neg(curvature(s), ExactSeries{});
  Form ch_diff = supertrace(terminal) - chern_character(s, ExactSeries{});
  report.terminal_gap = max_coefficient(diff);
  report.ch_gap = max_coefficient(ch_diff);
  report.passed = diff.is_zero() && ch_diff.is_zero() && residuals_zero;
  report.terminal_difference = std::move(diff);
  report.ch_difference = std::move(ch_diff);
  return report;
}

TransportReport verify_numeric(const Superconnection& s, const TransportSystem& sys,
                               const NumericTransport& mode, const TransportTolerances& tol) {
  TransportReport report;
  report.mode = "numeric";
  report.h = mode.step;
  report.point = mode.point;

  const auto traj = solve_rk4(sys, mode.point, mode.step);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const NumericMat dpsi0 = time_derivative(traj.psi0, k, mode.step);
    const auto r = raw_residual(s, mode.point, traj.psi0[k], traj.psi1[k], dpsi0);
    report.residual_constraint = std::max(report.residual_constraint, max_abs(r.constraint));
    report.residual_ode = std::max(report.residual_ode, max_abs(r.ode));
  }

  const NumericAtPoint exp_mode{mode.point, mode.exp_tolerance};
  const NumericMat& terminal = traj.psi0.back();
  report.terminal_gap = max_abs_diff(terminal, exp_neg(curvature(s), exp_mode));
  report.ch_gap = max_abs_diff(supertrace(terminal), chern_character(s, exp_mode));
  report.passed = report.terminal_gap <= tol.terminal && report.ch_gap <= tol.ch &&
                  report.residual_constraint <= tol.residual_constraint &&
                  report.residual_ode <= tol.residual_ode;
  return report;
}

}  // namespace

TransportSystem reduce_to_system(const Superconnection& s) {
  TransportSystem sys;
  sys.constraint_coeff = s.a_prime();
  sys.d_a_prime = d(s.a_prime());
  // Substituting psi1 = A' psi0 into d/dt psi0 + A' psi1 + (dA') psi0 = 0.
  sys.generator = sys.d_a_prime + sys.constraint_coeff * sys.constraint_coeff;
  if (!(sys.generator == curvature(s))) {
    throw std::logic_error("transport generator disagrees with the curvature");
  }
  return sys;
}

Residual<MatForm> raw_residual(const Superconnection& s, const MatForm& psi0, const MatForm& psi1,
                               const MatForm& dpsi0_dt) {
  return raw_residual(total_transport_coefficient(s), psi0, psi1, dpsi0_dt);
}

Residual<NumericMat> raw_residual(const Superconnection& s, std::span<const double> point,
                                  const NumericMat& psi0, const NumericMat& psi1,
                                  const NumericMat& dpsi0_dt) {
  const auto x = total_transport_coefficient(s);
  const ThetaPair<NumericMat> coefficient{eval(x.body, point), eval(x.soul, point)};
  return raw_residual(coefficient, psi0, psi1, dpsi0_dt);
}

MatForm solve_exact(const TransportSystem& sys, const Rational& t) {
  const auto powers = generator_powers(sys.generator);
  MatForm out(sys.generator.shape(), sys.generator.n_vars());
  for (std::size_t k = 0; k < powers.size(); ++k) {
    const Rational c = rational_pow(-t, k) / factorial(static_cast<unsigned>(k));
    out += powers[k].scaled(c);
  }
  return out;
}

MatForm solve_exact_time_derivative(const TransportSystem& sys, const Rational& t) {
  const auto powers = generator_powers(sys.generator);
  MatForm out(sys.generator.shape(), sys.generator.n_vars());
  // d/dt (-t)^k / k! = -(-t)^{k-1} / (k-1)!
  for (std::size_t k = 1; k < powers.size(); ++k) {
    const Rational c = -rational_pow(-t, k - 1) / factorial(static_cast<unsigned>(k - 1));
    out += powers[k].scaled(c);
  }
  return out;
}

MatForm constrained_soul(const TransportSystem& sys, const MatForm& psi0) {
  return sys.constraint_coeff * psi0;
}

std::size_t steps_for(double h) {
  if (!(h > 0.0) || !std::isfinite(h) || h > 1.0) {
    throw UsageError("step must lie in (0, 1]");
  }
  const double n = std::round(1.0 / h);
  if (std::fabs(n * h - 1.0) > 1e-9) throw UsageError("step must divide 1 evenly");
  return static_cast<std::size_t>(n);
}

SuperSectionTrajectory solve_rk4(const TransportSystem& sys, std::span<const double> point, double h) {
  const std::size_t steps = steps_for(h);
  const double dt = 1.0 / static_cast<double>(steps);
  const NumericMat g = eval(sys.generator, point);
  const NumericMat a = eval(sys.constraint_coeff, point);
  if (!all_finite(g) || !all_finite(a)) throw NumericError("non-finite transport coefficients");

  auto rhs = [&g](const NumericMat& y) {
    NumericMat out = g * y;
    out.scale(-1.0);
    return out;
  };

  SuperSectionTrajectory traj;
  traj.times.reserve(steps + 1);
  traj.psi0.reserve(steps + 1);
  NumericMat y = NumericMat::identity(g.shape(), g.n_vars());
  NumericMat carry(g.shape(), g.n_vars());
  traj.times.push_back(0.0);
  traj.psi0.push_back(y);
  for (std::size_t k = 0; k < steps; ++k) {
    const NumericMat k1 = rhs(y);
    const NumericMat k2 = rhs(NumericMat(y).add_scaled(0.5 * dt, k1));
    const NumericMat k3 = rhs(NumericMat(y).add_scaled(0.5 * dt, k2));
    const NumericMat k4 = rhs(NumericMat(y).add_scaled(dt, k3));
    NumericMat increment = k1;
    increment.add_scaled(2.0, k2).add_scaled(2.0, k3).add_scaled(1.0, k4).scale(dt / 6.0);
    // Kahan-compensated state update; keeps accumulated rounding O(eps) over many steps.
    auto yd = y.data();
    auto cd = carry.data();
    const auto inc = increment.data();
    for (std::size_t i = 0; i < yd.size(); ++i) {
      const double corrected = inc[i] - cd[i];
      const double next = yd[i] + corrected;
      cd[i] = (next - yd[i]) - corrected;
      yd[i] = next;
    }
    if (!all_finite(y)) throw NumericError("non-finite values during RK4 integration");
    traj.times.push_back(static_cast<double>(k + 1) / static_cast<double>(steps));
    traj.psi0.push_back(y);
  }
  traj.psi1.reserve(traj.psi0.size());
  for (const auto& psi0 : traj.psi0) traj.psi1.push_back(a * psi0);
  return traj;
}

TransportReport verify_theorem(const Superconnection& s, const TransportMode& mode,
                               const TransportTolerances& tolerances) {
  return verify_theorem(s, reduce_to_system(s), mode, tolerances);
}

TransportReport verify_theorem(const Superconnection& s, const TransportSystem& sys,
                               const TransportMode& mode, const TransportTolerances& tolerances) {
  if (std::holds_alternative<ExactSeries>(mode)) return verify_exact(s, sys);
  const auto& numeric = std::get<NumericTransport>(mode);
  if (numeric.point.size() != s.n_vars()) {
    throw DimensionError("point has " + std::to_string(numeric.point.size()) +
                         " coordinates, expected " + std::to_string(s.n_vars()));
  }
  return verify_numeric(s, sys, numeric, tolerances);
}

double max_coefficient(const Form& a) {
  double best = 0.0;
  for (const auto& [m, poly] : a.components()) {
    for (const auto& [e, c] : poly.terms()) best = std::max(best, std::fabs(to_double(c)));
  }
  return best;
}

double max_coefficient(const MatForm& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) best = std::max(best, max_coefficient(a(i, j)));
  }
  return best;
}

}  // namespace superchern
