#include <doctest.h>

#include <cmath>

#include "superchern/errors.hpp"
#include "superchern/expr.hpp"
#include "superchern/poly.hpp"
#include "superchern/sampling.hpp"

using namespace superchern;

namespace {

Poly P(const char* src, std::size_t n) { return parse_poly(src, n); }

}  // namespace

TEST_CASE("poly_add") {
  CHECK((P("x1", 1) + P("-x1", 1)).is_zero());
  CHECK(P("x1*x2 + 1", 2) + P("x1*x2", 2) == P("2*x1*x2 + 1", 2));
  CHECK(P("3/4", 1) + P("1/4", 1) == Poly::constant(1, 1));
  CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), DimensionError);
}

TEST_CASE("poly_mul") {
  CHECK(P("x1 + 1", 1) * P("x1 - 1", 1) == P("x1^2 - 1", 1));
  const Poly p = P("3*x1^2*x2 - 1/2*x2 + 7", 2);
  CHECK(p * Poly::constant(2, 1) == p);
  CHECK((p * Poly(2)).is_zero());
  CHECK_THROWS_AS(p * Poly::constant(3, 1), DimensionError);
}

TEST_CASE("poly_partial") {
  CHECK(P("x1^2*x2", 2).partial(0) == P("2*x1*x2", 2));
  CHECK(P("x1", 2).partial(1).is_zero());
  CHECK(P("x1 + x1*x2", 2).partial(0) == P("1 + x2", 2));
  CHECK_THROWS_AS(P("x1", 2).partial(2), DimensionError);
}

TEST_CASE("poly_eval") {
  const std::vector<double> pt{2.0, 3.0};
  CHECK(P("x1^2 + x2", 2).eval(pt) == 7.0);
  CHECK(Poly(2).eval(pt) == 0.0);
  CHECK(P("1/2*x1", 1).eval(std::vector<double>{1.0}) == 0.5);
  CHECK_THROWS_AS(P("x1", 2).eval(std::vector<double>{1.0}), DimensionError);
}

TEST_CASE("canonical representation") {
  Poly p(2);
  p.add_term({1, 0}, Rational(2));
  p.add_term({1, 0}, Rational(-2));
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  // Equal polynomials built in different orders compare structurally equal.
  CHECK(P("x2 + x1", 2) == P("x1 + x2", 2));
  CHECK(P("x1^2 - 2*x1 + 1", 1).to_string() == "1 - 2*x1 + 1*x1^2");
}

TEST_CASE("partials commute on random polynomials") {
  sampling::Rng rng(11);
  const sampling::PolyParams params{4, 5, 5, 4};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Poly p = sampling::random_poly(rng, n, params);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
    }
  }
}

TEST_CASE("partial derivative obeys the Leibniz rule") {
  sampling::Rng rng(12);
  const sampling::PolyParams params{3, 4, 5, 4};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Poly a = sampling::random_poly(rng, n, params);
    const Poly b = sampling::random_poly(rng, n, params);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
    }
  }
}

TEST_CASE("evaluation is a ring morphism") {
  sampling::Rng rng(13);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const sampling::PolyParams params{3, 4, 5, 4};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Poly a = sampling::random_poly(rng, n, params);
    const Poly b = sampling::random_poly(rng, n, params);
    std::vector<double> pt(n);
    for (auto& x : pt) x = coord(rng);
    const double lhs = (a * b).eval(pt);
    const double rhs = a.eval(pt) * b.eval(pt);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)}));
    CHECK(std::fabs((a + b).eval(pt) - (a.eval(pt) + b.eval(pt))) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
  }
}
