#include "superchern/graded_matrix.hpp"

#include <algorithm>

#include "superchern/errors.hpp"

namespace superchern {

namespace {

void require_compatible(const MatForm& a, const MatForm& b) {
  if (!(a.shape() == b.shape()) || a.n_vars() != b.n_vars()) {
    throw DimensionError("matrix shapes differ: (" + std::to_string(a.shape().p) + "," +
                         std::to_string(a.shape().q) + ") n=" + std::to_string(a.n_vars()) +
                         " vs (" + std::to_string(b.shape().p) + "," +
                         std::to_string(b.shape().q) + ") n=" + std::to_string(b.n_vars()));
  }
}

Parity form_parity(Mask m) { return (mask_degree(m) & 1u) ? Parity::odd : Parity::even; }

}  // namespace

GradedShape::GradedShape(std::size_t p_, std::size_t q_) : p(p_), q(q_) {
  if (p + q == 0) throw DimensionError("graded shape needs p + q >= 1");
}

MatForm::MatForm(GradedShape shape, std::size_t n_vars)
    : shape_(shape), n_vars_(n_vars), entries_(shape.size() * shape.size(), Form(n_vars)) {}

MatForm MatForm::identity(GradedShape shape, std::size_t n_vars) {
  MatForm out(shape, n_vars);
  for (std::size_t i = 0; i < shape.size(); ++i) out.set(i, i, Form::constant(n_vars, 1));
  return out;
}

MatForm MatForm::scalar(GradedShape shape, const Form& f) {
  MatForm out(shape, f.n_vars());
  for (std::size_t i = 0; i < shape.size(); ++i) out.set(i, i, f);
  return out;
}

void MatForm::set(std::size_t i, std::size_t j, Form f) {
  if (i >= size() || j >= size()) throw DimensionError("matrix index out of range");
  if (f.n_vars() != n_vars_) throw DimensionError("entry variable count differs from matrix");
  entries_[i * size() + j] = std::move(f);
}

bool MatForm::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Form& f) { return f.is_zero(); });
}

MatForm& MatForm::operator+=(const MatForm& other) {
  require_compatible(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

MatForm& MatForm::operator-=(const MatForm& other) {
  require_compatible(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

MatForm MatForm::operator-() const {
  MatForm out = *this;
  for (auto& f : out.entries_) f = -f;
  return out;
}

MatForm MatForm::scaled(const Rational& c) const {
  MatForm out = *this;
  for (auto& f : out.entries_) f = f.scaled(c);
  return out;
}

std::optional<Parity> MatForm::total_parity() const {
  std::optional<Parity> seen;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      for (const auto& [m, c] : (*this)(i, j).components()) {
        const Parity par = form_parity(m) + shape_.block_parity(i, j);
        if (seen && *seen != par) return std::nullopt;
        seen = par;
      }
    }
  }
  return seen.value_or(Parity::even);
}

MatForm MatForm::parity_involution() const {
  MatForm out = *this;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      Form& f = out.entries_[i * size() + j];
      f = shape_.block_parity(i, j) == Parity::odd ? -f.grade_involution() : f.grade_involution();
    }
  }
  return out;
}

unsigned MatForm::max_poly_degree() const {
  unsigned best = 0;
  for (const auto& f : entries_) best = std::max(best, f.max_poly_degree());
  return best;
}

std::string MatForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    out += '[';
    for (std::size_t j = 0; j < size(); ++j) {
      if (j > 0) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]\n";
  }
  return out;
}

MatForm operator+(MatForm a, const MatForm& b) { return a += b; }

MatForm operator-(MatForm a, const MatForm& b) { return a -= b; }

MatForm operator*(const MatForm& a, const MatForm& b) {
  require_compatible(a, b);
  const auto& shape = a.shape();
  const std::size_t m = a.size();
  // Koszul-twisted copies of b's entries, used when a's factor is off-diagonal.
  std::vector<Form> b_twisted;
  b_twisted.reserve(m * m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) b_twisted.push_back(b(k, l).grade_involution());
  }

  MatForm out(shape, a.n_vars());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < m; ++l) {
      Form acc(a.n_vars());
      for (std::size_t k = 0; k < m; ++k) {
        const Form& left = a(i, k);
        if (left.is_zero()) continue;
        const Form& right = shape.block_parity(i, k) == Parity::odd ? b_twisted[k * m + l] : b(k, l);
        if (right.is_zero()) continue;
        acc += wedge(left, right);
      }
      out.set(i, l, std::move(acc));
    }
  }
  return out;
}

MatForm d(const MatForm& a) {
  MatForm out(a.shape(), a.n_vars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out.set(i, j, d(a(i, j)));
  }
  return out;
}

Form supertrace(const MatForm& a) {
  Form out(a.n_vars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.shape().row_parity(i) == Parity::even) {
      out += a(i, i);
    } else {
      out -= a(i, i);
    }
  }
  return out;
}

ParityParts parity_decompose(const MatForm& a) {
  ParityParts parts{MatForm(a.shape(), a.n_vars()), MatForm(a.shape(), a.n_vars())};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      Form even(a.n_vars());
      Form odd(a.n_vars());
      for (const auto& [m, c] : a(i, j).components()) {
        const Parity par = form_parity(m) + a.shape().block_parity(i, j);
        (par == Parity::even ? even : odd).add_component(m, c);
      }
      parts.even.set(i, j, std::move(even));
      parts.odd.set(i, j, std::move(odd));
    }
  }
  return parts;
}

MatForm supercommutator(const MatForm& a, const MatForm& b) {
  const auto pa = a.total_parity();
  const auto pb = b.total_parity();
  if (!pa || !pb) throw InvariantError("supercommutator needs total-parity homogeneous arguments");
  MatForm ab = a * b;
  MatForm ba = b * a;
  if (*pa == Parity::odd && *pb == Parity::odd) return ab + ba;
  return ab - ba;
}

MatForm power(const MatForm& a, unsigned k) {
  MatForm out = MatForm::identity(a.shape(), a.n_vars());
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace superchern
