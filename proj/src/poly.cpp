#include "superchern/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "superchern/errors.hpp"

namespace superchern {

namespace {

void require_same_vars(const Poly& a, const Poly& b) {
  if (a.n_vars() != b.n_vars()) {
    throw DimensionError("polynomial variable counts differ: " + std::to_string(a.n_vars()) +
                         " vs " + std::to_string(b.n_vars()));
  }
}

}  // namespace

Poly Poly::constant(std::size_t n_vars, const Rational& c) {
  Poly p(n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t n_vars, std::size_t index) {
  if (index >= n_vars) {
    throw DimensionError("variable index " + std::to_string(index + 1) + " out of range 1.." +
                         std::to_string(n_vars));
  }
  Exponents e(n_vars, 0);
  e[index] = 1;
  return monomial(n_vars, std::move(e), Rational(1));
}

Poly Poly::monomial(std::size_t n_vars, Exponents exponents, const Rational& c) {
  if (exponents.size() != n_vars) {
    throw DimensionError("exponent vector length does not match variable count");
  }
  Poly p(n_vars);
  p.add_term(exponents, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

unsigned Poly::total_degree() const noexcept {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, std::accumulate(e.begin(), e.end(), 0u));
  }
  return best;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly(n_vars_);
  Poly r = *this;
  for (auto& [e, coeff] : r.terms_) coeff *= c;
  return r;
}

Poly Poly::partial(std::size_t index) const {
  if (index >= n_vars_) {
    throw DimensionError("partial derivative index " + std::to_string(index + 1) +
                         " out of range 1.." + std::to_string(n_vars_));
  }
  Poly r(n_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents lowered = e;
    --lowered[index];
    r.add_term(lowered, c * e[index]);
  }
  return r;
}

double Poly::eval(std::span<const double> point) const {
  if (point.size() != n_vars_) {
    throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, expected " + std::to_string(n_vars_));
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = to_double(c);
    for (std::size_t i = 0; i < n_vars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) m *= point[i];
    }
    sum += m;
  }
  return sum;
}

std::string monomial_string(const Poly::Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += superchern::to_string(negative ? Rational(-c) : c);
    const auto mono = monomial_string(e);
    if (!mono.empty()) out += '*' + mono;
    first = false;
  }
  return out;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }

Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_vars(a, b);
  Poly r(a.n_vars());
  Poly::Exponents e(a.n_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

}  // namespace superchern
