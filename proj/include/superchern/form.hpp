#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "superchern/mask.hpp"
#include "superchern/numeric_exterior.hpp"
#include "superchern/poly.hpp"

namespace superchern {

/// Differential form on R^n with polynomial coefficients, possibly of mixed degree.
///
/// Components are keyed by the index tuple I (as a Mask) and hold the Poly
/// coefficient of dx_I. Only strictly increasing tuples exist and zero
/// coefficients are dropped, so equality is structural.
class Form {
 public:
  using ComponentMap = std::map<Mask, Poly>;

  Form() = default;
  explicit Form(std::size_t n_vars);

  static Form constant(std::size_t n_vars, const Rational& c);
  static Form from_poly(const Poly& f);
  // coeff * dx_I
  static Form basis(const Poly& coeff, Mask index_tuple);
  // dx_i, 0-based
  static Form dx(std::size_t n_vars, std::size_t index);

  std::size_t n_vars() const noexcept { return n_vars_; }
  const ComponentMap& components() const noexcept { return components_; }
  bool is_zero() const noexcept { return components_.empty(); }

  // Coefficient of dx_I, zero if absent.
  Poly coefficient(Mask index_tuple) const;

  void add_component(Mask index_tuple, const Poly& coeff);

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form operator-() const;
  Form scaled(const Rational& c) const;
  Form times(const Poly& f) const;

  /// Restriction to the |I| = k components.
  Form degree_component(unsigned k) const;

  /// Degree if all components share one, nullopt for mixed or zero forms.
  std::optional<unsigned> homogeneous_degree() const;

  /// Negates odd-degree components (the grading automorphism).
  Form grade_involution() const;

  unsigned max_poly_degree() const;

  NumericExterior eval(std::span<const double> point) const;

  /// Canonical text: terms ordered by (degree, index tuple, exponent vector),
  /// e.g. `1 - 1*dx1^dx2` or `3/2*x1^2*dx2`.
  std::string to_string() const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  void check_mask(Mask m) const;

  std::size_t n_vars_ = 0;
  ComponentMap components_;
};

Form operator+(Form a, const Form& b);
Form operator-(Form a, const Form& b);

/// Exterior product; (f dx_I) ^ (g dx_J) = sign(I,J) fg dx_{I u J}.
Form wedge(const Form& a, const Form& b);

/// Exterior derivative.
Form d(const Form& a);

// Renders a dx tuple as `dx1^dx3`; empty for the empty tuple.
std::string dx_string(Mask index_tuple);

}  // namespace superchern
