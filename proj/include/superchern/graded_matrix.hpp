#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superchern/form.hpp"

namespace superchern {

enum class Parity { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

/// Ranks of the even and odd summands of E = R^p + R^q.
struct GradedShape {
  std::size_t p = 1;
  std::size_t q = 0;

  GradedShape() = default;
  GradedShape(std::size_t p_, std::size_t q_);

  std::size_t size() const noexcept { return p + q; }
  Parity row_parity(std::size_t i) const noexcept { return i < p ? Parity::even : Parity::odd; }
  // Even iff i and j lie in the same block.
  Parity block_parity(std::size_t i, std::size_t j) const noexcept {
    return row_parity(i) + row_parity(j);
  }

  friend bool operator==(const GradedShape&, const GradedShape&) = default;
};

/// Square matrix of forms, i.e. an element of Omega*(R^n, End E).
///
/// Products carry the Koszul sign of the graded tensor product
/// Omega* (x) End E: moving a dx_J past an odd elementary matrix E_ik costs
/// (-1)^{|J|}. Entry contributions f dx_I in block (i,j) have total parity
/// |I| + block_parity(i,j).
class MatForm {
 public:
  MatForm() = default;
  MatForm(GradedShape shape, std::size_t n_vars);

  static MatForm zero(GradedShape shape, std::size_t n_vars) { return {shape, n_vars}; }
  static MatForm identity(GradedShape shape, std::size_t n_vars);
  static MatForm scalar(GradedShape shape, const Form& f);

  const GradedShape& shape() const noexcept { return shape_; }
  std::size_t n_vars() const noexcept { return n_vars_; }
  std::size_t size() const noexcept { return shape_.size(); }

  const Form& operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  void set(std::size_t i, std::size_t j, Form f);

  bool is_zero() const;

  MatForm& operator+=(const MatForm& other);
  MatForm& operator-=(const MatForm& other);
  MatForm operator-() const;
  MatForm scaled(const Rational& c) const;

  /// Total parity if homogeneous; zero counts as both, reported as even.
  std::optional<Parity> total_parity() const;

  /// Negates every odd-total-parity contribution.
  MatForm parity_involution() const;

  unsigned max_poly_degree() const;

  std::string to_string() const;

  friend bool operator==(const MatForm&, const MatForm&) = default;

 private:
  GradedShape shape_;
  std::size_t n_vars_ = 0;
  std::vector<Form> entries_;
};

MatForm operator+(MatForm a, const MatForm& b);
MatForm operator-(MatForm a, const MatForm& b);

/// Graded matrix product: (ab)_{il} = sum_k a_ik ^ s_ik(b_kl), where s_ik is the
/// grade involution when (i,k) is an off-diagonal block and the identity otherwise.
MatForm operator*(const MatForm& a, const MatForm& b);

/// Entrywise exterior derivative.
MatForm d(const MatForm& a);

/// Sum of the even-block diagonal minus the odd-block diagonal.
Form supertrace(const MatForm& a);

struct ParityParts {
  MatForm even;
  MatForm odd;
};

ParityParts parity_decompose(const MatForm& a);

/// ab - (-1)^{|a||b|} ba for total-parity homogeneous a, b.
MatForm supercommutator(const MatForm& a, const MatForm& b);

/// a^k, k >= 0.
MatForm power(const MatForm& a, unsigned k);

}  // namespace superchern
