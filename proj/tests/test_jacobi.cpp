#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "support.hpp"
#include "symjac/errors.hpp"
#include "symjac/jacobi.hpp"
#include "symjac/quadrature.hpp"

using namespace symjac;
using testing_support::default_params;

namespace {

double legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return p0;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// binom(n + a, n) through log-gamma
double binom_shifted(int n, double a) {
  return std::exp(std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0) - std::lgamma(a + 1.0));
}

}  // namespace

TEST_CASE("JacobiParams validation and derived constants") {
  CHECK_THROWS_AS(JacobiParams(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(JacobiParams(0.0, -1.5), DomainError);
  for (const auto& p : default_params()) {
    CHECK(p.shifted(1).shift() == doctest::Approx(p.shift() + 1.0).epsilon(1e-15));
  }
  const JacobiParams q(-0.7, 0.0);
  CHECK(q.p_upper() == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(q.p_lower() == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(q.admits(3.0));
  CHECK_FALSE(q.admits(5.0));
  CHECK_FALSE(q.admits(1.25));
  const JacobiParams r(0.0, 0.0);
  CHECK(std::isinf(r.p_upper()));
  CHECK(r.p_lower() == 1.0);
  CHECK(JacobiParams(-0.5, -0.5).zero_bottom_eigenvalue());
  CHECK_FALSE(r.zero_bottom_eigenvalue());
}

TEST_CASE("jacobi polynomials: low degrees and Legendre case") {
  CHECK(jacobi_poly(0, JacobiParams(0.4, 1.3), 0.3) == 1.0);
  for (double x : {-1.0, -0.3, 0.0, 0.55, 1.0}) {
    CHECK(jacobi_poly(1, JacobiParams(0.0, 0.0), x) == doctest::Approx(x).epsilon(1e-15));
    const double a = 0.3, b = 0.7;
    CHECK(jacobi_poly(1, JacobiParams(a, b), x) ==
          doctest::Approx((a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0).epsilon(1e-15));
  }
  // (63 x^5 - 70 x^3 + 15 x) / 8 at 0.7
  CHECK(legendre(5, 0.7) == doctest::Approx(-0.36519875).epsilon(1e-14));
  CHECK(jacobi_poly(5, JacobiParams(0.0, 0.0), 0.7) == doctest::Approx(-0.36519875).epsilon(1e-14));
  for (int n = 0; n <= 60; ++n) {
    for (double x : {-0.91, -0.2, 0.33, 0.97}) {
      CHECK(jacobi_poly(n, JacobiParams(0.0, 0.0), x) ==
            doctest::Approx(legendre(n, x)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(jacobi_poly(3, JacobiParams(0.0, 0.0), 1.0001), DomainError);
}

TEST_CASE("jacobi polynomials: endpoint values at degree 200") {
  for (const auto& p : default_params()) {
    const double right = jacobi_poly(200, p, 1.0);
    const double left = jacobi_poly(200, p, -1.0);
    CHECK(right == doctest::Approx(binom_shifted(200, p.alpha())).epsilon(1e-8));
    CHECK(left == doctest::Approx(binom_shifted(200, p.beta())).epsilon(1e-8));
  }
}

TEST_CASE("psi weight") {
  CHECK(psi_weight(JacobiParams(-0.5, -0.5), 1.1) == 1.0);
  CHECK(psi_weight(JacobiParams(0.5, -0.5), std::numbers::pi / 2) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  for (const auto& p : default_params()) {
    for (double t : {0.01, 0.7, 2.0, 3.1}) CHECK(psi_weight(p, t) == psi_weight(p, -t));
  }
  CHECK_THROWS_AS(psi_weight(JacobiParams(-0.7, 0.4), 0.0), SingularPointError);
  CHECK_THROWS_AS(psi_weight(JacobiParams(0.0, 0.0), std::numbers::pi), DomainError);
  CHECK_THROWS_AS(psi_weight(JacobiParams(0.0, 0.0), -std::numbers::pi), DomainError);
  CHECK(psi_weight(JacobiParams(0.2, 0.0), 0.0) == 0.0);
}

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue(0, JacobiParams(-0.3, -0.7)) == doctest::Approx(0.0));
  CHECK(eigenvalue(3, JacobiParams(-0.5, -0.5)) == 9.0);
  for (const auto& p : default_params()) {
    for (int n = 0; n < 30; ++n) {
      CHECK(eigenvalue(n + 1, p) == doctest::Approx(eigenvalue(n, p.shifted(1))).epsilon(1e-15));
      CHECK(eigenvalue(n + 1, p) >= eigenvalue(n, p));
    }
  }
}

TEST_CASE("normalization constants") {
  CHECK(norm_constant(0, JacobiParams(-0.5, -0.5)) ==
        doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-14));

  // int_0^pi sin^3(t/2) cos(t/2) dt = 1/2
  const JacobiParams p(1.0, 0.0);
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double t) { return std::pow(psi_weight(p, t), 2); }, 0.0, std::numbers::pi, 15, 1e-14);
  CHECK(integral == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(norm_constant(0, p) == doctest::Approx(1.0 / std::sqrt(integral)).epsilon(1e-10));
  CHECK(norm_constant(0, p) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));

  for (const auto& q : default_params()) {
    const QuadratureGrid g = gauss_jacobi_rule(80, q);
    for (int n : {0, 1, 7, 40, 63}) {
      double s = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) s += g.weight(i) * std::pow(eval_phi(n, q, g.node(i)), 2);
      CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(norm_constant(n, q) > 0.0);
    }
  }
  // large degree stays finite
  CHECK(std::isfinite(norm_constant(400, JacobiParams(2.5, 1.5))));
}

TEST_CASE("jacobi functions: Fourier case and evenness") {
  const JacobiParams f(-0.5, -0.5);
  const JacobiFunctions fns(f, 41);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = -std::numbers::pi + (i + 0.5) * 2.0 * std::numbers::pi / 1000.0;
    const std::vector<double> v = fns.evaluate(t);
    for (int n = 1; n <= 40; ++n) {
      worst = std::max(worst, std::abs(v[n] - std::sqrt(2.0 / std::numbers::pi) * std::cos(n * t)));
    }
  }
  CHECK(worst < 1e-12);
  for (const auto& p : default_params()) {
    for (int n : {0, 3, 12}) {
      for (double t : {0.2, 1.3, 2.9}) CHECK(eval_phi(n, p, t) == eval_phi(n, p, -t));
      CHECK(eval_phi(0, p, 1.0) ==
            doctest::Approx(norm_constant(0, p) * psi_weight(p, 1.0)).epsilon(1e-15));
    }
  }
  CHECK_THROWS_AS(eval_phi(2, JacobiParams(-0.7, 0.4), 0.0), SingularPointError);
}

TEST_CASE("gauss-jacobi rule") {
  const QuadratureGrid one = gauss_jacobi_rule(1, JacobiParams(0.0, 0.0));
  REQUIRE(one.size() == 1);
  CHECK(one.node(0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(one.weight(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(one.source().has_value());

  const JacobiParams p(0.3, 0.7);
  const QuadratureGrid g = gauss_jacobi_rule(64, p);
  double by_rule = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) by_rule += g.weight(i) * std::pow(psi_weight(p, g.node(i)), 2);
  boost::math::quadrature::tanh_sinh<double> ts;
  const double by_adaptive =
      ts.integrate([&](double t) { return std::pow(psi_weight(p, t), 2); }, 0.0, std::numbers::pi);
  CHECK(by_rule == doctest::Approx(by_adaptive).epsilon(1e-10));

  // degree 2N - 1 exactness on a monomial
  const int n = 12;
  const QuadratureGrid h = gauss_jacobi_rule(n, p);
  double lhs = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    lhs += h.weight(i) * std::pow(psi_weight(p, h.node(i)), 2) * std::pow(std::cos(h.node(i)), 2 * n - 1);
  }
  const double rhs = ts.integrate(
      [&](double t) { return std::pow(psi_weight(p, t), 2) * std::pow(std::cos(t), 2 * n - 1); }, 0.0,
      std::numbers::pi);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11).scale(1.0));
}

TEST_CASE("orthonormality of jacobi functions") {
  for (const auto& p : default_params()) {
    for (int order : {41, 96}) {
      const QuadratureGrid g = gauss_jacobi_rule(order, p);
      const JacobiFunctions fns(p, 41);
      std::vector<std::vector<double>> v;
      for (std::size_t i = 0; i < g.size(); ++i) v.push_back(fns.evaluate(g.node(i)));
      double worst = 0.0;
      for (int m = 0; m <= 40; ++m) {
        for (int n = 0; n <= 40; ++n) {
          double s = 0.0;
          for (std::size_t i = 0; i < g.size(); ++i) s += g.weight(i) * v[i][m] * v[i][n];
          worst = std::max(worst, std::abs(s - (m == n ? 1.0 : 0.0)));
        }
      }
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("quadrature grid validation") {
  CHECK_THROWS_AS(QuadratureGrid({0.5, 0.2}, {1.0, 1.0}, Interval::half_line), GridError);
  CHECK_THROWS_AS(QuadratureGrid({0.5}, {0.0}, Interval::half_line), GridError);
  CHECK_THROWS_AS(QuadratureGrid({-0.5, 0.0, 0.5}, {1.0, 1.0, 1.0}, Interval::symmetric), GridError);
  CHECK_THROWS_AS(QuadratureGrid({-0.5}, {1.0}, Interval::half_line), GridError);
  CHECK_THROWS_AS(QuadratureGrid({0.5, 1.0}, {1.0}, Interval::half_line), GridError);
  const QuadratureGrid s = symmetric_rule(10, JacobiParams(0.3, 0.7));
  CHECK(s.size() == 20);
  CHECK(s.is_mirror_symmetric());
  CHECK(s.node(s.mirror_index(3)) == -s.node(3));
  const QuadratureGrid half = s.positive_half();
  CHECK(half.size() == 10);
  CHECK(half.interval() == Interval::half_line);
  const QuadratureGrid asym({-0.5, 0.7}, {1.0, 1.0}, Interval::symmetric);
  CHECK_FALSE(asym.is_mirror_symmetric());
  CHECK_THROWS_AS(asym.mirror_index(0), GridError);
}
