#pragma once

// Pullbacks along the universal superpoint path R^{1|1} x PiTM -> R^{0|1} x PiTM -> M.
//
// Everything here is expressed through theta-expansions body + theta * soul,
// with theta odd and theta^2 = 0. Moving theta across an element x gives
// x theta = theta sigma(x), where sigma negates the odd part of x.

#include "superchern/form.hpp"
#include "superchern/graded_matrix.hpp"
#include "superchern/numeric_matrix.hpp"
#include "superchern/poly.hpp"
#include "superchern/superconnection.hpp"

namespace superchern {

/// body + theta * soul (theta written on the left).
template <class T>
struct ThetaPair {
  T body;
  T soul;

  friend bool operator==(const ThetaPair&, const ThetaPair&) = default;
};

namespace detail {

inline Form graded_product(const Form& a, const Form& b) { return wedge(a, b); }
inline MatForm graded_product(const MatForm& a, const MatForm& b) { return a * b; }
inline NumericMat graded_product(const NumericMat& a, const NumericMat& b) { return a * b; }

inline Form odd_negated(const Form& a) { return a.grade_involution(); }
inline MatForm odd_negated(const MatForm& a) { return a.parity_involution(); }
inline NumericMat odd_negated(const NumericMat& a) { return a.parity_involution(); }

}  // namespace detail

template <class T>
ThetaPair<T> operator+(const ThetaPair<T>& a, const ThetaPair<T>& b) {
  return {a.body + b.body, a.soul + b.soul};
}

template <class T>
ThetaPair<T> operator-(const ThetaPair<T>& a, const ThetaPair<T>& b) {
  return {a.body - b.body, a.soul - b.soul};
}

/// (a0 + theta a1)(b0 + theta b1) = a0 b0 + theta (sigma(a0) b1 + a1 b0).
template <class T>
ThetaPair<T> theta_mul(const ThetaPair<T>& a, const ThetaPair<T>& b) {
  using detail::graded_product;
  return {graded_product(a.body, b.body),
          graded_product(detail::odd_negated(a.body), b.soul) + graded_product(a.soul, b.body)};
}

/// Coefficient of theta when theta is written on the right: body + right_soul * theta.
template <class T>
T right_soul(const ThetaPair<T>& a) {
  return detail::odd_negated(a.soul);
}

template <class T>
ThetaPair<T> from_right_soul(T body, const T& right) {
  return {std::move(body), detail::odd_negated(right)};
}

/// The R^{0|1}-action on functions of PiTM: a -> a + (-1)^{deg a} (da) theta, degreewise.
ThetaPair<Form> t_star(const Form& a);

/// Lift pullback of a matrix of forms: A - theta dA.
ThetaPair<MatForm> tilde_c_pullback(const MatForm& a);

/// D-contraction of the pulled-back connection form: -omega + (d omega) theta.
/// omega must be a block-diagonal 1-form.
ThetaPair<MatForm> connection_coefficient(const MatForm& omega);

/// Coefficient X of the transport equation D psi - X psi = 0: A' - theta dA'.
ThetaPair<MatForm> total_transport_coefficient(const Superconnection& s);

struct FdgContraction {
  ThetaPair<Form> via_connection;  // connection_coefficient applied to f dg
  ThetaPair<Form> via_t_star;      // d-theta coefficient of T*(f) delta T*(g)
};

FdgContraction fdg_contraction_routes(const Poly& f, const Poly& g);

/// Both routes agree on -f dg + (df ^ dg) theta.
bool verify_fdg_contraction(const Poly& f, const Poly& g);

}  // namespace superchern
