#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "superchern/graded_matrix.hpp"
#include "superchern/numeric_exterior.hpp"

namespace superchern {

/// Element of the finite-dimensional algebra Lambda(R^n) (x) M_{p+q}(R).
///
/// Stored as 2^n row-major (p+q)x(p+q) blocks, one per dx-mask; the product
/// follows the same Koszul convention as MatForm. All bulk arithmetic goes
/// through the active kernel table.
class NumericMat {
 public:
  NumericMat() = default;
  NumericMat(GradedShape shape, std::size_t n_vars);

  static NumericMat identity(GradedShape shape, std::size_t n_vars);

  const GradedShape& shape() const noexcept { return shape_; }
  std::size_t n_vars() const noexcept { return n_vars_; }
  std::size_t size() const noexcept { return shape_.size(); }
  std::size_t block_size() const noexcept { return size() * size(); }
  std::size_t mask_count() const noexcept { return std::size_t{1} << n_vars_; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  std::span<double> block(Mask m) { return {data_.data() + m * block_size(), block_size()}; }
  std::span<const double> block(Mask m) const {
    return {data_.data() + m * block_size(), block_size()};
  }

  double& at(Mask m, std::size_t i, std::size_t j) { return data_[m * block_size() + i * size() + j]; }
  double at(Mask m, std::size_t i, std::size_t j) const {
    return data_[m * block_size() + i * size() + j];
  }

  NumericMat& operator+=(const NumericMat& other);
  NumericMat& operator-=(const NumericMat& other);
  // this += a * other
  NumericMat& add_scaled(double a, const NumericMat& other);
  NumericMat& scale(double a);

  NumericMat parity_involution() const;

  friend bool operator==(const NumericMat&, const NumericMat&) = default;

 private:
  GradedShape shape_;
  std::size_t n_vars_ = 0;
  std::vector<double> data_;
};

NumericMat operator+(NumericMat a, const NumericMat& b);
NumericMat operator-(NumericMat a, const NumericMat& b);
NumericMat operator*(const NumericMat& a, const NumericMat& b);

NumericMat eval(const MatForm& a, std::span<const double> point);
NumericExterior supertrace(const NumericMat& a);

double max_abs(const NumericMat& a);
double max_abs_diff(const NumericMat& a, const NumericMat& b);
bool all_finite(const NumericMat& a);

}  // namespace superchern
