#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superchern/mask.hpp"

namespace superchern {

/// Element of the 2^n-dimensional real exterior algebra; coordinate `m`
/// multiplies dx_I for the index tuple encoded by mask m.
struct NumericExterior {
  std::size_t n_vars = 0;
  std::vector<double> coords;

  NumericExterior() = default;
  explicit NumericExterior(std::size_t n);

  double& operator[](Mask m) { return coords[m]; }
  double operator[](Mask m) const { return coords[m]; }
  std::size_t size() const { return coords.size(); }
};

NumericExterior wedge(const NumericExterior& a, const NumericExterior& b);
NumericExterior operator+(const NumericExterior& a, const NumericExterior& b);
NumericExterior operator-(const NumericExterior& a, const NumericExterior& b);

double max_abs(const NumericExterior& a);
double max_abs_diff(const NumericExterior& a, const NumericExterior& b);

// e.g. `0.5 + 2*dx1^dx2`; coordinates with |value| <= threshold are skipped.
std::string to_string(const NumericExterior& a, double threshold = 0.0);

}  // namespace superchern
