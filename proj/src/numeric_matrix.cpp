#include "superchern/numeric_matrix.hpp"

#include "superchern/errors.hpp"
#include "superchern/kernels.hpp"

namespace superchern {

namespace {

void require_compatible(const NumericMat& a, const NumericMat& b) {
  if (!(a.shape() == b.shape()) || a.n_vars() != b.n_vars()) {
    throw DimensionError("numeric matrix shapes differ");
  }
}

// Copy of a block with its off-diagonal (odd) blocks negated: conjugation by the grading operator.
void conjugate_by_grading(const GradedShape& shape, std::span<const double> in, std::span<double> out) {
  const std::size_t m = shape.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double v = in[i * m + j];
      out[i * m + j] = shape.block_parity(i, j) == Parity::odd ? -v : v;
    }
  }
}

}  // namespace

NumericMat::NumericMat(GradedShape shape, std::size_t n_vars) : shape_(shape), n_vars_(n_vars) {
  if (n_vars > kMaxVars) throw DimensionError("at most " + std::to_string(kMaxVars) + " chart variables");
  data_.assign(mask_count() * block_size(), 0.0);
}

NumericMat NumericMat::identity(GradedShape shape, std::size_t n_vars) {
  NumericMat out(shape, n_vars);
  for (std::size_t i = 0; i < shape.size(); ++i) out.at(0, i, i) = 1.0;
  return out;
}

NumericMat& NumericMat::operator+=(const NumericMat& other) { return add_scaled(1.0, other); }

NumericMat& NumericMat::operator-=(const NumericMat& other) { return add_scaled(-1.0, other); }

NumericMat& NumericMat::add_scaled(double a, const NumericMat& other) {
  require_compatible(*this, other);
  kernels::axpy(a, other.data_, data_);
  return *this;
}

NumericMat& NumericMat::scale(double a) {
  kernels::scale(a, data_);
  return *this;
}

NumericMat NumericMat::parity_involution() const {
  NumericMat out = *this;
  for (Mask m = 0; m < mask_count(); ++m) {
    const bool odd_degree = (mask_degree(m) & 1u) != 0;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        const bool odd_block = shape_.block_parity(i, j) == Parity::odd;
        if (odd_degree != odd_block) out.at(m, i, j) = -out.at(m, i, j);
      }
    }
  }
  return out;
}

NumericMat operator+(NumericMat a, const NumericMat& b) { return a += b; }

NumericMat operator-(NumericMat a, const NumericMat& b) { return a -= b; }

NumericMat operator*(const NumericMat& a, const NumericMat& b) {
  require_compatible(a, b);
  const auto& table = kernels::active();
  const std::size_t m = a.size();
  const std::size_t bs = a.block_size();
  const Mask full = static_cast<Mask>(a.mask_count() - 1);

  // For odd |J| the Koszul sign is (-1)^{block(i,k)}, i.e. a's block conjugated by the grading.
  std::vector<double> a_twisted(a.data().size());
  for (Mask i = 0; i <= full; ++i) {
    conjugate_by_grading(a.shape(), a.block(i), {a_twisted.data() + i * bs, bs});
  }
  std::vector<bool> b_nonzero(a.mask_count());
  for (Mask j = 0; j <= full; ++j) b_nonzero[j] = table.max_abs(b.block(j).data(), bs) != 0.0;

  NumericMat out(a.shape(), a.n_vars());
  for (Mask i = 0; i <= full; ++i) {
    if (table.max_abs(a.block(i).data(), bs) == 0.0) continue;
    const Mask rest = full & ~i;
    for (Mask j = rest;; j = (j - 1) & rest) {
      if (b_nonzero[j]) {
        const double* left = (mask_degree(j) & 1u) ? a_twisted.data() + i * bs : a.block(i).data();
        table.gemm_acc(m, wedge_sign(i, j), left, b.block(j).data(), out.block(i | j).data());
      }
      if (j == 0) break;
    }
  }
  return out;
}

NumericMat eval(const MatForm& a, std::span<const double> point) {
  NumericMat out(a.shape(), a.n_vars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      for (const auto& [mask, coeff] : a(i, j).components()) out.at(mask, i, j) = coeff.eval(point);
    }
  }
  return out;
}

NumericExterior supertrace(const NumericMat& a) {
  NumericExterior out(a.n_vars());
  for (Mask m = 0; m < a.mask_count(); ++m) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += a.shape().row_parity(i) == Parity::even ? a.at(m, i, i) : -a.at(m, i, i);
    }
    out[m] = s;
  }
  return out;
}

double max_abs(const NumericMat& a) { return kernels::max_abs(a.data()); }

double max_abs_diff(const NumericMat& a, const NumericMat& b) {
  require_compatible(a, b);
  return kernels::max_abs_diff(a.data(), b.data());
}

bool all_finite(const NumericMat& a) { return kernels::all_finite(a.data()); }

}  // namespace superchern
