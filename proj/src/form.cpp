#include "superchern/form.hpp"

#include <algorithm>
#include <vector>

#include "superchern/errors.hpp"

namespace superchern {

namespace {

void require_same_vars(const Form& a, const Form& b) {
  if (a.n_vars() != b.n_vars()) {
    throw DimensionError("form variable counts differ: " + std::to_string(a.n_vars()) + " vs " +
                         std::to_string(b.n_vars()));
  }
}

// (degree, index tuple) order used for rendering.
bool render_before(Mask a, Mask b) {
  if (mask_degree(a) != mask_degree(b)) return mask_degree(a) < mask_degree(b);
  return mask_indices(a) < mask_indices(b);
}

}  // namespace

Form::Form(std::size_t n_vars) : n_vars_(n_vars) {
  if (n_vars > kMaxVars) throw DimensionError("at most " + std::to_string(kMaxVars) + " chart variables");
}

Form Form::constant(std::size_t n_vars, const Rational& c) {
  return from_poly(Poly::constant(n_vars, c));
}

Form Form::from_poly(const Poly& f) { return basis(f, 0); }

Form Form::basis(const Poly& coeff, Mask index_tuple) {
  Form out(coeff.n_vars());
  out.add_component(index_tuple, coeff);
  return out;
}

Form Form::dx(std::size_t n_vars, std::size_t index) {
  if (index >= n_vars) throw DimensionError("dx index out of range");
  return basis(Poly::constant(n_vars, 1), Mask{1} << index);
}

Poly Form::coefficient(Mask index_tuple) const {
  auto it = components_.find(index_tuple);
  return it == components_.end() ? Poly(n_vars_) : it->second;
}

void Form::check_mask(Mask m) const {
  if (n_vars_ < 32 && (m >> n_vars_) != 0) {
    throw DimensionError("dx index exceeds chart dimension " + std::to_string(n_vars_));
  }
}

void Form::add_component(Mask index_tuple, const Poly& coeff) {
  if (coeff.n_vars() != n_vars_) throw DimensionError("coefficient variable count differs from form");
  check_mask(index_tuple);
  if (coeff.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(index_tuple, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) components_.erase(it);
  }
}

Form& Form::operator+=(const Form& other) {
  require_same_vars(*this, other);
  for (const auto& [m, c] : other.components_) add_component(m, c);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  require_same_vars(*this, other);
  for (const auto& [m, c] : other.components_) add_component(m, -c);
  return *this;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [m, c] : out.components_) c = -c;
  return out;
}

Form Form::scaled(const Rational& c) const {
  if (c == 0) return Form(n_vars_);
  Form out = *this;
  for (auto& [m, coeff] : out.components_) coeff = coeff.scaled(c);
  return out;
}

Form Form::times(const Poly& f) const {
  Form out(n_vars_);
  for (const auto& [m, c] : components_) out.add_component(m, f * c);
  return out;
}

Form Form::degree_component(unsigned k) const {
  Form out(n_vars_);
  for (const auto& [m, c] : components_) {
    if (mask_degree(m) == k) out.components_.emplace(m, c);
  }
  return out;
}

std::optional<unsigned> Form::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const auto& [m, c] : components_) {
    if (deg && *deg != mask_degree(m)) return std::nullopt;
    deg = mask_degree(m);
  }
  return deg;
}

Form Form::grade_involution() const {
  Form out = *this;
  for (auto& [m, c] : out.components_) {
    if (mask_degree(m) & 1u) c = -c;
  }
  return out;
}

unsigned Form::max_poly_degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : components_) best = std::max(best, c.total_degree());
  return best;
}

NumericExterior Form::eval(std::span<const double> point) const {
  NumericExterior out(n_vars_);
  for (const auto& [m, c] : components_) out[m] = c.eval(point);
  return out;
}

std::string dx_string(Mask index_tuple) {
  std::string out;
  for (auto i : mask_indices(index_tuple)) {
    if (!out.empty()) out += '^';
    out += "dx" + std::to_string(i + 1);
  }
  return out;
}

std::string Form::to_string() const {
  if (components_.empty()) return "0";
  std::vector<Mask> order;
  order.reserve(components_.size());
  for (const auto& [m, c] : components_) order.push_back(m);
  std::sort(order.begin(), order.end(), render_before);

  std::string out;
  bool first = true;
  for (Mask m : order) {
    const std::string dx = dx_string(m);
    for (const auto& [e, c] : components_.at(m).terms()) {
      const bool negative = c < 0;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      out += superchern::to_string(negative ? Rational(-c) : c);
      const std::string mono = monomial_string(e);
      if (!mono.empty()) out += '*' + mono;
      if (!dx.empty()) out += '*' + dx;
      first = false;
    }
  }
  return out;
}

Form operator+(Form a, const Form& b) { return a += b; }

Form operator-(Form a, const Form& b) { return a -= b; }

Form wedge(const Form& a, const Form& b) {
  require_same_vars(a, b);
  Form out(a.n_vars());
  for (const auto& [ma, ca] : a.components()) {
    for (const auto& [mb, cb] : b.components()) {
      const int sign = wedge_sign(ma, mb);
      if (sign == 0) continue;
      Poly prod = ca * cb;
      out.add_component(ma | mb, sign > 0 ? prod : -prod);
    }
  }
  return out;
}

Form d(const Form& a) {
  Form out(a.n_vars());
  for (const auto& [m, c] : a.components()) {
    for (std::size_t i = 0; i < a.n_vars(); ++i) {
      const Mask bit = Mask{1} << i;
      const int sign = wedge_sign(bit, m);
      if (sign == 0) continue;
      Poly di = c.partial(i);
      if (di.is_zero()) continue;
      out.add_component(bit | m, sign > 0 ? di : -di);
    }
  }
  return out;
}

}  // namespace superchern
