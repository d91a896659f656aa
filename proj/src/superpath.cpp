#include "superchern/superpath.hpp"

#include "superchern/errors.hpp"

namespace superchern {

ThetaPair<Form> t_star(const Form& a) {
  Form soul(a.n_vars());
  for (unsigned k = 0; k <= a.n_vars(); ++k) {
    const Form part = a.degree_component(k);
    if (part.is_zero()) continue;
    // (-1)^k d(a_k) theta; theta then moves left past a (k+1)-form.
    const Form right = d(part).scaled(parity_sign(k));
    soul += right.scaled(parity_sign(k + 1));
  }
  return {a, soul};
}

ThetaPair<MatForm> tilde_c_pullback(const MatForm& a) { return {a, -d(a)}; }

ThetaPair<MatForm> connection_coefficient(const MatForm& omega) {
  for (std::size_t i = 0; i < omega.size(); ++i) {
    for (std::size_t j = 0; j < omega.size(); ++j) {
      const Form& f = omega(i, j);
      if (f.is_zero()) continue;
      if (omega.shape().block_parity(i, j) == Parity::odd) {
        throw InvariantError("connection form must be block-diagonal");
      }
      if (f.homogeneous_degree() != 1u) throw InvariantError("connection form must be a 1-form");
    }
  }
  return {-omega, d(omega)};
}

ThetaPair<MatForm> total_transport_coefficient(const Superconnection& s) {
  return {s.a_prime(), -d(s.a_prime())};
}

FdgContraction fdg_contraction_routes(const Poly& f, const Poly& g) {
  const std::size_t n = f.n_vars();
  const Form omega_form = wedge(Form::from_poly(f), d(Form::from_poly(g)));

  MatForm omega(GradedShape(1, 0), n);
  omega.set(0, 0, omega_form);
  const auto coeff = connection_coefficient(omega);
  ThetaPair<Form> via_connection{coeff.body(0, 0), coeff.soul(0, 0)};

  // delta(T*g) = delta g + delta(R) theta + (-1)^{|R|} R delta theta, R the right soul of T*g.
  const auto tg = t_star(Form::from_poly(g));
  const Form delta_theta_coeff = right_soul(tg).grade_involution();
  const ThetaPair<Form> dtheta_factor{delta_theta_coeff, Form(n)};
  ThetaPair<Form> via_t_star = theta_mul(t_star(Form::from_poly(f)), dtheta_factor);
  return {std::move(via_connection), std::move(via_t_star)};
}

bool verify_fdg_contraction(const Poly& f, const Poly& g) {
  const auto routes = fdg_contraction_routes(f, g);
  return routes.via_connection == routes.via_t_star;
}

}  // namespace superchern
