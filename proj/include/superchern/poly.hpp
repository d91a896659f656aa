#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "superchern/rational.hpp"

namespace superchern {

/// Multivariate polynomial over Q in a fixed number of chart variables.
///
/// Terms are kept in a map keyed by exponent vector (lexicographic order) and
/// zero coefficients are never stored, so two equal polynomials compare equal
/// structurally. Variable indices are 0-based in this API; renderings use
/// x1..xn.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  Poly() = default;
  explicit Poly(std::size_t n_vars) : n_vars_(n_vars) {}

  static Poly constant(std::size_t n_vars, const Rational& c);
  static Poly variable(std::size_t n_vars, std::size_t index);
  static Poly monomial(std::size_t n_vars, Exponents exponents, const Rational& c);

  std::size_t n_vars() const noexcept { return n_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  unsigned total_degree() const noexcept;

  // Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly operator-() const;
  Poly scaled(const Rational& c) const;

  /// Formal partial derivative in variable `index` (0-based).
  Poly partial(std::size_t index) const;

  /// Evaluates at a real point; coefficients are converted to double per term.
  double eval(std::span<const double> point) const;

  /// Canonical text, terms in ascending exponent order, e.g. `1 + 3/2*x1^2*x2`.
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::size_t n_vars_ = 0;
  TermMap terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

// Renders a monomial's variable part (`x1^2*x3`), empty for the constant monomial.
std::string monomial_string(const Poly::Exponents& e);

}  // namespace superchern
