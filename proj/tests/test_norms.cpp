#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "symjac/basis.hpp"
#include "symjac/ensemble.hpp"
#include "symjac/errors.hpp"
#include "symjac/norms.hpp"
#include "symjac/operators.hpp"
#include "symjac/pointwise.hpp"

using namespace symjac;
using testing_support::default_params;
using testing_support::half_grid;
using testing_support::symmetric_grid;
using testing_support::unit;

namespace {

constexpr double ulp = std::numeric_limits<double>::epsilon();
const double two_pi = 2.0 * std::numbers::pi;

double weight_sum(const QuadratureGrid& g) {
  double s = 0.0;
  for (double w : g.weights()) s += w;
  return s;
}

}  // namespace

TEST_CASE("lp norms on grids") {
  const JacobiParams fourier(-0.5, -0.5);
  const GridPtr grid = symmetric_grid(fourier, 40);
  const RealGridFunction one(grid, [](double) { return 1.0; });
  CHECK(lp_norm(one, 2.0) == doctest::Approx(std::sqrt(two_pi)).epsilon(1e-10));
  CHECK(lp_norm(one, std::numeric_limits<double>::infinity()) == 1.0);
  CHECK_THROWS_AS(lp_norm(one, 0.5), DomainError);
  const ComplexGridFunction z(grid, [](double t) { return std::polar(2.0, t); });
  CHECK(lp_norm(z, 1.0) == doctest::Approx(2.0 * two_pi).epsilon(1e-12));

  for (const auto& p : default_params()) {
    const GridPtr g = symmetric_grid(p, default_quadrature_order(30));
    for (int n : {0, 1, 7, 29}) {
      CHECK(lp_norm(synthesize(unit(p, n, 30), g), 2.0) == doctest::Approx(1.0).epsilon(1e-9));
    }
    const double q = p.admits(3.0) ? 3.0 : 2.0;
    const GridPtr lg = lp_grid(p, q, 60);
    const RealGridFunction f = synthesize(ensemble_member(EnsembleSpec{p, 1, 20, 3}, 0), lg);
    const auto [e, o] = split_even_odd(f);
    CHECK(lp_norm_from_parts(e, o, q) == doctest::Approx(lp_norm(f, q)).epsilon(1e-10));
    CHECK(lp_norm_from_parts(e, o, std::numeric_limits<double>::infinity()) ==
          lp_norm(f, std::numeric_limits<double>::infinity()));
  }
}

TEST_CASE("weight matched grids") {
  for (const auto& p : default_params()) {
    for (double q : {1.0, 2.0, 3.0}) {
      if (q >= p.p_upper()) continue;
      const JacobiParams w = lp_weight_params(p, q);
      for (double t : {0.2, 1.1, 2.8}) {
        CHECK(std::pow(psi_weight(w, t), 2) == doctest::Approx(std::pow(psi_weight(p, t), q)).epsilon(1e-13));
      }
    }
    const GridPtr two = lp_grid(p, 2.0, 20);
    const QuadratureGrid plain = symmetric_rule(20, p);
    for (std::size_t i = 0; i < plain.size(); ++i) CHECK(two->node(i) == doctest::Approx(plain.node(i)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(lp_weight_params(JacobiParams(-0.7, 0.0), 5.0), DomainError);

  // at p = 1 the weight-matched rule integrates |Phi_0| = c_0 Psi / sqrt(2) exactly:
  // int_0^pi sin^a(t/2) cos^b(t/2) dt = B((a+1)/2, (b+1)/2)
  for (const auto& p : default_params()) {
    const double want = std::numbers::sqrt2 * norm_constant(0, p) *
                        std::beta(0.5 * (p.alpha() + 1.5), 0.5 * (p.beta() + 1.5));
    for (int count : {3, 40}) {
      CHECK(lp_norm(synthesize(unit(p, 0, 1), lp_grid(p, 1.0, count)), 1.0) ==
            doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("potential norms") {
  for (const auto& p : default_params()) {
    const GridPtr grid = symmetric_grid(p, default_quadrature_order(30));
    const bool bessel = potential_form(p) == PotentialForm::bessel;
    CHECK(bessel == p.zero_bottom_eigenvalue());
    for (int n = 0; n < 30; ++n) {
      const double lambda = eigenvalue(bracket(n), p);
      const double want = std::pow(bessel ? 1.0 + lambda : lambda, 0.35);
      CHECK(potential_norm(unit(p, n, 30), 2.0, 0.7, grid) == doctest::Approx(want).epsilon(1e-10).scale(1.0));
      if ((bessel ? 1.0 + lambda : lambda) >= 1.0) {
        double last = 0.0;
        for (double s : {0.0, 0.5, 1.0, 1.5, 2.0}) {
          const double v = potential_norm(unit(p, n, 30), 2.0, s, grid);
          CHECK(v >= last * (1.0 - 1e-14));
          last = v;
        }
      }
    }
    const SymmExpansion f = ensemble_member(EnsembleSpec{p, 1, 30, 12}, 0);
    const SymmExpansion lifted = bessel ? bessel_potential(f, 0.4) : riesz_potential(f, 0.4);
    const SymmExpansion g1 = potential_preimage(lifted, 1.5);
    const SymmExpansion g2 = potential_preimage(f, 0.7);
    for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
      CHECK(g1.coeffs[n] == doctest::Approx(g2.coeffs[n]).epsilon(8 * ulp));
    }
    for (double q : {2.0, 3.0}) {
      if (!p.admits(q)) continue;
      const GridPtr lg = lp_grid(p, q, 80);
      CHECK(potential_norm(lifted, q, 1.5, lg) == doctest::Approx(potential_norm(f, q, 0.7, lg)).epsilon(1e-13));
    }
  }
  const JacobiParams narrow(-0.7, 0.0);
  const GridPtr grid = symmetric_grid(narrow, 30);
  CHECK_THROWS_AS(potential_norm(unit(narrow, 1, 4), 5.0, 0.5, grid), AdmissibilityError);
  CHECK_THROWS_AS(potential_norm(unit(narrow, 1, 4), 1.25, 0.5, grid), AdmissibilityError);
  try {
    potential_norm(unit(narrow, 1, 4), 6.0, 0.5, grid);
  } catch (const AdmissibilityError& e) {
    CHECK(std::string(e.what()).find("E(alpha, beta)") != std::string::npos);
  }
}

TEST_CASE("parity pieces carry the potential norm at p = 2") {
  for (const auto& p : default_params()) {
    const GridPtr grid = symmetric_grid(p, default_quadrature_order(32));
    const GridPtr half = half_grid(p, default_quadrature_order(32));
    const GridPtr half_up = half_grid(p.shifted(1), default_quadrature_order(32));
    const PotentialForm form = potential_form(p);
    for (std::size_t i = 0; i < 10; ++i) {
      const SymmExpansion f = ensemble_member(EnsembleSpec{p, 10, 32, 20240917}, i);
      const HalfLinePair<double> parts = to_halfline(f);
      const double whole = potential_norm(f, 2.0, 0.8, grid);
      const double e = halfline_potential_norm(parts.from_even, 2.0, 0.8, half, form);
      const double o = halfline_potential_norm(parts.from_odd, 2.0, 0.8, half_up, form);
      CHECK(whole == doctest::Approx(std::sqrt(2.0 * (e * e + o * o))).epsilon(1e-9));
    }
  }
}

TEST_CASE("sobolev norms") {
  for (const auto& p : default_params()) {
    const GridPtr grid = symmetric_grid(p, default_quadrature_order(24));
    const SymmExpansion zero{p, std::vector<double>(8, 0.0)};
    CHECK(sobolev_norm(zero, 2.0, 2, grid) == 0.0);
    const auto [a, b] = alt_sobolev_norms(zero, 2.0, 2, grid);
    CHECK(a == 0.0);
    CHECK(b == 0.0);
    for (std::size_t i = 0; i < 4; ++i) {
      const SymmExpansion f = ensemble_member(EnsembleSpec{p, 4, 20, 9}, i);
      const double base = lp_norm(synthesize(f, grid), 2.0);
      CHECK(sobolev_norm(f, 2.0, 0, grid) == doctest::Approx(base).epsilon(1e-15));
      CHECK(sobolev_norm(f, 2.0, 1, grid) >= base);
      CHECK(sobolev_norm(f, 2.0, 2, grid) >= sobolev_norm(f, 2.0, 1, grid));
      const auto [fixed, variable] = alt_sobolev_norms(f, 2.0, 1, grid);
      CHECK(fixed == doctest::Approx(variable).epsilon(1e-10));
    }
    // k = 1, 2 terms vanish for sign(theta) Psi^{alpha+1,beta+1}
    const JacobiParams up = p.shifted(1);
    const SymmExpansion g =
        analyze([&](double t) { return (t < 0 ? -1.0 : 1.0) * psi_weight(up, t); }, p, 8);
    const double g0 = lp_norm(synthesize(g, grid), 2.0);
    CHECK(sobolev_norm(g, 2.0, 2, grid) == doctest::Approx(g0).epsilon(1e-11));
    CHECK_THROWS_AS(sobolev_norm(g, 2.0, -1, grid), DomainError);
  }
  const JacobiParams narrow(-0.7, 0.4);
  CHECK_THROWS_AS(sobolev_norm(unit(narrow, 0, 2), 1.2, 1, symmetric_grid(narrow, 10)), AdmissibilityError);
}

TEST_CASE("first witness has a vanishing dunkl term") {
  for (const JacobiParams p : {JacobiParams(-0.3, -0.3), JacobiParams(-0.4, -0.1)}) {
    const double a = -p.alpha() - 1.0, b = -p.beta() - 1.0;
    const JetFunction f = times_sign_power(
        [=](double t, std::size_t order) { return psi_jet(a, b, t, order); }, 1);
    const JetFunction df = apply_dunkl(f, p.alpha(), p.beta());
    for (double t : {-3.0, -1.2, -0.05, 0.01, 0.4, 2.2, 3.1}) {
      const Jet v = f(t, 1);
      CHECK(std::abs(df(t, 0).value()) <= 1e-12 * std::abs(v.derivative(1)));
    }
  }
}

TEST_CASE("admissibility decisions") {
  const Admissibility a = admissibility(JacobiParams(0.0, 0.0), 2.0, 4.0, 0.2);
  CHECK(a.p_in_range);
  CHECK(a.lp_to_lq.value());
  CHECK(a.embedding.value());
  CHECK(a.lp_to_linf.value() == false);
  CHECK(a.continuity.value() == false);
  CHECK(std::isinf(a.p_upper));
  CHECK(a.p_lower == 1.0);

  const Admissibility b = admissibility(JacobiParams(-0.7, 0.0), 3.0);
  CHECK(b.p_upper == 5.0);
  CHECK(b.p_lower == 1.25);
  CHECK(b.p_in_range);
  CHECK_FALSE(b.lp_to_lq.has_value());
  CHECK_FALSE(admissibility(JacobiParams(-0.7, 0.0), 5.0).p_in_range);
  CHECK_FALSE(admissibility(JacobiParams(-0.7, 0.0), 1.25).p_in_range);

  const Admissibility c = admissibility(JacobiParams(0.0, 0.0), 2.0, 8.0, 0.1);
  CHECK_FALSE(c.lp_to_lq.value());
  const Admissibility d = admissibility(JacobiParams(0.0, 0.0), 2.0, std::numeric_limits<double>::infinity(), 0.3);
  CHECK(d.lp_to_linf.value());
  CHECK(d.continuity.value());
  CHECK_FALSE(admissibility(JacobiParams(-0.7, 0.4), 2.0, {}, 0.5).continuity.value());
}

TEST_CASE("mixed space-time norms") {
  const JacobiParams fourier(-0.5, -0.5);
  const GridPtr grid = symmetric_grid(fourier, 24);
  const SpaceTimeFunction c(grid, 16, [](std::size_t, double) { return std::complex<double>(3.0, 0.0); });
  CHECK(mixed_norm(c, 2.0, 4.0) == doctest::Approx(3.0 * std::pow(two_pi, 0.25) * std::pow(two_pi, 0.5)).epsilon(1e-12));

  for (const auto& p : default_params()) {
    const GridPtr g = symmetric_grid(p, 40);
    const RealGridFunction phi = synthesize(unit(p, 5, 6), g);
    const double lambda = eigenvalue(bracket(5), p);
    const SpaceTimeFunction wave(g, 32, [&](std::size_t i, double t) { return std::polar(1.0, t * lambda) * phi[i]; });
    const SpaceTimeFunction still(g, 32, [&](std::size_t i, double) { return std::complex<double>(phi[i], 0.0); });
    for (double q : {1.0, 2.0, 4.0}) {
      CHECK(mixed_norm(wave, 3.0, q) == doctest::Approx(std::pow(two_pi, 1.0 / q) * lp_norm(phi, 3.0)).epsilon(1e-12));
      CHECK(mixed_norm(still, 2.0, q) == doctest::Approx(std::pow(two_pi, 1.0 / q) * lp_norm(phi, 2.0)).epsilon(1e-12));
    }
    CHECK(mixed_norm(wave, 2.0, std::numeric_limits<double>::infinity()) == doctest::Approx(lp_norm(phi, 2.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(SpaceTimeFunction::time_nodes(0), DomainError);
  CHECK_THROWS_AS(mixed_norm(c, 0.5, 2.0), DomainError);
}

TEST_CASE("Hoelder containment between lp norms") {
  const GridPtr grid = symmetric_grid(JacobiParams(-0.5, -0.5), 80);
  const double total = weight_sum(*grid);
  CHECK(total == doctest::Approx(two_pi).epsilon(1e-13));
  for (const auto& p : default_params()) {
    for (std::size_t i = 0; i < 10; ++i) {
      const RealGridFunction f = synthesize(ensemble_member(EnsembleSpec{p, 10, 32, 1}, i), grid);
      for (auto [a, b] : {std::pair{1.0, 2.0}, std::pair{2.0, 3.0}, std::pair{1.5, 4.0}}) {
        CHECK(lp_norm(f, a) <= std::pow(total, 1.0 / a - 1.0 / b) * lp_norm(f, b) * (1.0 + 1e-13));
      }
    }
  }
}

TEST_CASE("divergence detection") {
  // truncated integrals of t^{-2} double per halving of eps
  const DivergenceReport blow = detect_divergence([](double t) { return std::pow(t, -2.0); }, 0.2);
  CHECK(blow.divergent);
  CHECK(blow.growth.size() == 3);
  CHECK(blow.epsilon.back() == doctest::Approx(0.025));
  for (double g : blow.growth) CHECK(g > 1.5);
  const double pi = std::numbers::pi;
  for (std::size_t j = 0; j < blow.value.size(); ++j) {
    const double e = blow.epsilon[j];
    CHECK(blow.value[j] == doctest::Approx(1.0 / e - 1.0 / (pi - e)).epsilon(1e-10));
  }
  // t^{-3/2} grows only by about sqrt(2) per level, below the threshold
  const DivergenceReport mild = detect_divergence([](double t) { return std::pow(t, -1.5); }, 0.2);
  CHECK_FALSE(mild.divergent);
  CHECK(mild.growth.back() == doctest::Approx(std::sqrt(2.0)).epsilon(0.05));
  CHECK_FALSE(detect_divergence([](double t) { return std::pow(t, -0.5); }, 0.2).divergent);
  CHECK_FALSE(detect_divergence([](double t) { return 1.0 / t; }, 0.2).divergent);
  CHECK_THROWS_AS(detect_divergence([](double) { return 1.0; }, 2.0), DomainError);
}
