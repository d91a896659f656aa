#include "superchern/numeric_exterior.hpp"

#include <cmath>
#include <sstream>

#include "superchern/errors.hpp"
#include "superchern/form.hpp"
#include "superchern/kernels.hpp"

namespace superchern {

namespace {

void require_same(const NumericExterior& a, const NumericExterior& b) {
  if (a.n_vars != b.n_vars) throw DimensionError("numeric exterior elements differ in dimension");
}

}  // namespace

NumericExterior::NumericExterior(std::size_t n) : n_vars(n) {
  if (n > kMaxVars) throw DimensionError("at most " + std::to_string(kMaxVars) + " chart variables");
  coords.assign(std::size_t{1} << n, 0.0);
}

NumericExterior wedge(const NumericExterior& a, const NumericExterior& b) {
  require_same(a, b);
  NumericExterior out(a.n_vars);
  const Mask full = static_cast<Mask>(a.size() - 1);
  for (Mask i = 0; i <= full; ++i) {
    if (a[i] == 0.0) continue;
    // Enumerate the subsets of the complement of I.
    const Mask rest = full & ~i;
    for (Mask j = rest;; j = (j - 1) & rest) {
      out[i | j] += wedge_sign(i, j) * a[i] * b[j];
      if (j == 0) break;
    }
  }
  return out;
}

NumericExterior operator+(const NumericExterior& a, const NumericExterior& b) {
  require_same(a, b);
  NumericExterior out = a;
  kernels::axpy(1.0, b.coords, out.coords);
  return out;
}

NumericExterior operator-(const NumericExterior& a, const NumericExterior& b) {
  require_same(a, b);
  NumericExterior out = a;
  kernels::axpy(-1.0, b.coords, out.coords);
  return out;
}

double max_abs(const NumericExterior& a) { return kernels::max_abs(a.coords); }

double max_abs_diff(const NumericExterior& a, const NumericExterior& b) {
  require_same(a, b);
  return kernels::max_abs_diff(a.coords, b.coords);
}

std::string to_string(const NumericExterior& a, double threshold) {
  std::ostringstream out;
  out.precision(17);
  bool first = true;
  for (unsigned deg = 0; deg <= a.n_vars; ++deg) {
    for (Mask m = 0; m < a.size(); ++m) {
      if (mask_degree(m) != deg || std::fabs(a[m]) <= threshold) continue;
      const double v = a[m];
      if (first) {
        if (v < 0) out << '-';
      } else {
        out << (v < 0 ? " - " : " + ");
      }
      out << std::fabs(v);
      if (m != 0) out << '*' << dx_string(m);
      first = false;
    }
  }
  return first ? "0" : out.str();
}

}  // namespace superchern
