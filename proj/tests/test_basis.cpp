#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "symjac/basis.hpp"
#include "symjac/ensemble.hpp"
#include "symjac/errors.hpp"
#include "symjac/norms.hpp"

using namespace symjac;
using testing_support::default_params;
using testing_support::symmetric_grid;
using testing_support::unit;

namespace {

double bump(double t, double centre, double width) {
  const double u = (t - centre) / width;
  return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
}

double test_function(double t) { return bump(t, 1.2, 0.6) - 0.7 * bump(t, -2.0, 0.5); }

}  // namespace

TEST_CASE("bracket index map") {
  CHECK(bracket(0) == 0);
  CHECK(bracket(1) == 1);
  CHECK(bracket(2) == 1);
  CHECK(bracket(7) == 4);
}

TEST_CASE("symmetrized basis parity and Fourier case") {
  for (const auto& p : default_params()) {
    for (int n = 0; n < 12; ++n) {
      for (double t : {0.3, 1.7, 3.0}) {
        if (n % 2 == 0) {
          CHECK(eval_Phi(n, p, -t) == eval_Phi(n, p, t));
        } else {
          CHECK(eval_Phi(n, p, -t) == -eval_Phi(n, p, t));
        }
      }
    }
    CHECK_THROWS_AS(eval_Phi(1, p, 0.0), SingularPointError);
  }
  const JacobiParams f(-0.5, -0.5);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = -std::numbers::pi + (i + 0.5) * 2.0 * std::numbers::pi / 1000.0;
    for (int n = 0; n < 20; ++n) {
      const double even = n == 0 ? 1.0 / std::sqrt(2.0 * std::numbers::pi)
                                 : std::cos(n * t) / std::sqrt(std::numbers::pi);
      worst = std::max(worst, std::abs(eval_Phi(2 * n, f, t) - even));
      worst = std::max(worst, std::abs(eval_Phi(2 * n + 1, f, t) -
                                       std::sin((n + 1) * t) / std::sqrt(std::numbers::pi)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("symmetrized Gram matrix") {
  for (const auto& p : default_params()) {
    const QuadratureGrid g = symmetric_rule(default_quadrature_order(41), p);
    const SymmetrizedFunctions fns(p, 41);
    std::vector<std::vector<double>> v(g.size(), std::vector<double>(41));
    for (std::size_t i = 0; i < g.size(); ++i) fns.evaluate(g.node(i), v[i]);
    double worst = 0.0;
    for (int m = 0; m <= 40; ++m) {
      for (int n = 0; n <= 40; ++n) {
        double s = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) s += g.weight(i) * v[i][m] * v[i][n];
        worst = std::max(worst, std::abs(s - (m == n ? 1.0 : 0.0)));
      }
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("reflection and parity split") {
  const JacobiParams p(0.3, 0.7);
  const GridPtr grid = symmetric_grid(p, 30);
  const RealGridFunction even = synthesize(unit(p, 2, 8), grid);
  const RealGridFunction odd = synthesize(unit(p, 1, 8), grid);
  const RealGridFunction re = reflect(even);
  const RealGridFunction ro = reflect(odd);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    CHECK(re[i] == even[i]);
    CHECK(ro[i] == -odd[i]);
  }
  const RealGridFunction twice = reflect(reflect(odd));
  for (std::size_t i = 0; i < grid->size(); ++i) CHECK(twice[i] == odd[i]);

  const auto [e2, o2] = split_even_odd(even);
  const auto [e1, o1] = split_even_odd(odd);
  for (std::size_t i = 0; i < e2.size(); ++i) {
    const double t = e2.grid().node(i);
    CHECK(e2[i] == doctest::Approx(eval_phi(1, p, t) / std::numbers::sqrt2).epsilon(1e-14));
    CHECK(o2[i] == 0.0);
    CHECK(e1[i] == 0.0);
    CHECK(o1[i] == doctest::Approx(eval_phi(0, p.shifted(1), t) / std::numbers::sqrt2).epsilon(1e-14));
  }

  const SymmExpansion f = ensemble_member(EnsembleSpec{p, 1, 12, 7}, 0);
  const RealGridFunction s = synthesize(f, grid);
  const auto [fe, fo] = split_even_odd(s);
  const std::size_t n = fe.size();
  double full = 0.0, parts = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(s[n + i] == doctest::Approx(fe[i] + fo[i]).epsilon(1e-15));
    CHECK(s[n - 1 - i] == doctest::Approx(fe[i] - fo[i]).epsilon(1e-15));
    parts += 2.0 * fe.grid().weight(i) * (fe[i] * fe[i] + fo[i] * fo[i]);
  }
  for (std::size_t i = 0; i < s.size(); ++i) full += grid->weight(i) * s[i] * s[i];
  CHECK(full == doctest::Approx(parts).epsilon(1e-13));

  const auto asym = std::make_shared<const QuadratureGrid>(
      std::vector<double>{-0.5, 0.7}, std::vector<double>{1.0, 1.0}, Interval::symmetric);
  CHECK_THROWS_AS(reflect(RealGridFunction(asym, std::vector<double>{1.0, 2.0})), GridError);
  CHECK_THROWS_AS(split_even_odd(RealGridFunction(asym, std::vector<double>{1.0, 2.0})), GridError);
}

TEST_CASE("analysis of pointwise functions") {
  for (const auto& p : default_params()) {
    const SymmExpansion a = analyze([&](double t) { return eval_Phi(3, p, t); }, p, 10);
    for (int n = 0; n < 10; ++n) CHECK(a.coeffs[n] == doctest::Approx(n == 3 ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));

    const SymmExpansion b =
        analyze([&](double t) { return eval_Phi(0, p, t) + 2.0 * eval_Phi(5, p, t); }, p, 10);
    for (int n = 0; n < 10; ++n) {
      const double want = n == 0 ? 1.0 : (n == 5 ? 2.0 : 0.0);
      CHECK(b.coeffs[n] == doctest::Approx(want).scale(1.0).epsilon(1e-12));
    }

    // sign(t) Psi^{a+1,b+1} = sqrt(2) / c_0^{a+1,b+1} Phi_1
    const JacobiParams up = p.shifted(1);
    const SymmExpansion g = analyze(
        [&](double t) { return (t < 0 ? -1.0 : 1.0) * psi_weight(up, t); }, p, 16);
    for (int n = 0; n < 16; n += 2) CHECK(g.coeffs[n] == 0.0);
    CHECK(g.coeffs[1] == doctest::Approx(std::numbers::sqrt2 / norm_constant(0, up)).epsilon(1e-12));
    for (int n = 3; n < 16; n += 2) CHECK(std::abs(g.coeffs[n]) < 1e-12);
  }
  CHECK_THROWS_AS(analyze([](double) { return 1.0; }, JacobiParams(0, 0), 40, 10), ConfigurationError);
  CHECK_THROWS_AS(analyze([](double) { return 1.0; }, JacobiParams(0, 0), 0), DomainError);
}

TEST_CASE("synthesis and analysis round trip on grids") {
  for (const auto& p : default_params()) {
    const SymmExpansion f = ensemble_member(EnsembleSpec{p, 1, 64, 99}, 0);
    const GridPtr grid = symmetric_grid(p, default_quadrature_order(64));
    const RealGridFunction s = synthesize(f, grid);
    const SymmExpansion back = analyze(s, p, 64);
    double worst = 0.0, norm2 = 0.0, coeff2 = 0.0;
    for (int n = 0; n < 64; ++n) worst = std::max(worst, std::abs(back.coeffs[n] - f.coeffs[n]));
    CHECK(worst < 1e-12);
    for (std::size_t i = 0; i < s.size(); ++i) norm2 += grid->weight(i) * s[i] * s[i];
    for (double b : f.coeffs) coeff2 += b * b;
    CHECK(std::sqrt(norm2) == doctest::Approx(std::sqrt(coeff2)).epsilon(1e-10));

    // the even part comes from even indices alone
    SymmExpansion evens = f;
    for (std::size_t n = 1; n < evens.coeffs.size(); n += 2) evens.coeffs[n] = 0.0;
    const auto [fe, fo] = split_even_odd(s);
    const auto [ee, eo] = split_even_odd(synthesize(evens, grid));
    for (std::size_t i = 0; i < fe.size(); ++i) {
      CHECK(ee[i] == doctest::Approx(fe[i]).epsilon(1e-12).scale(1.0));
      CHECK(std::abs(eo[i]) < 1e-14);
    }
    CHECK_THROWS_AS(analyze(s, p, 2 * default_quadrature_order(64)), ConfigurationError);
  }
  const JacobiParams p(0.0, 0.0);
  const GridPtr grid = symmetric_grid(p, 40);
  const RealGridFunction e0 = synthesize(unit(p, 0, 4), grid);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    CHECK(e0[i] == doctest::Approx(norm_constant(0, p) * psi_weight(p, grid->node(i)) /
                                   std::numbers::sqrt2).epsilon(1e-14));
  }
}

TEST_CASE("half-line pieces") {
  const JacobiParams p(-0.7, 0.4);
  const HalfLinePair<double> two = to_halfline(unit(p, 2, 6));
  CHECK(two.from_even.params == p);
  CHECK(two.from_odd.params == p.shifted(1));
  CHECK(two.from_even.parity == Parity::even);
  CHECK(two.from_odd.parity == Parity::odd);
  CHECK(two.from_even.coeffs[1] == doctest::Approx(1.0 / std::numbers::sqrt2));
  for (double a : two.from_odd.coeffs) CHECK(a == 0.0);

  const SymmExpansion f = ensemble_member(EnsembleSpec{p, 1, 17, 3}, 0);
  const HalfLinePair<double> parts = to_halfline(f);
  double total = 0.0, split = 0.0;
  for (double b : f.coeffs) total += b * b;
  for (double a : parts.from_even.coeffs) split += 2.0 * a * a;
  for (double a : parts.from_odd.coeffs) split += 2.0 * a * a;
  CHECK(total == doctest::Approx(split).epsilon(1e-15));

  const auto back = recombine(parts);
  REQUIRE(back.has_value());
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    CHECK(back->coeffs[n] == doctest::Approx(f.coeffs[n]).epsilon(1e-12));
  }
  const auto swapped = recombine(parts.from_odd, parts.from_even);
  REQUIRE(swapped.has_value());
  CHECK(swapped->coeffs.size() >= f.coeffs.size());
  HalfLineExpansion wrong = parts.from_odd;
  wrong.parity = Parity::even;
  CHECK_FALSE(recombine(parts.from_even, wrong).has_value());

  const GridPtr grid = symmetric_grid(p, 30);
  const RealGridFunction whole = synthesize(f, grid);
  const RealGridFunction even = synthesize(parts.from_even, grid);
  const RealGridFunction odd = synthesize(parts.from_odd, grid);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    CHECK(whole[i] == doctest::Approx(even[i] + odd[i]).epsilon(1e-12));
  }
}

TEST_CASE("projections approach smooth compactly supported functions") {
  for (const auto& p : default_params()) {
    const double p_mid = p.admits(3.0) ? 3.0 : 0.5 * (p.p_lower() + std::min(p.p_upper(), 8.0));
    for (double q : {1.0, 2.0, p_mid}) {
      const GridPtr fine = lp_grid(p, q, 400);
      std::vector<double> distance;
      for (int m : {8, 16, 32, 64}) {
        const SymmExpansion proj = analyze(test_function, p, m, 400);
        const RealGridFunction s = synthesize(proj, fine);
        std::vector<double> diff(fine->size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = test_function(fine->node(i)) - s[i];
        distance.push_back(lp_norm(RealGridFunction(fine, std::move(diff)), q));
      }
      for (std::size_t j = 1; j < distance.size(); ++j) CHECK(distance[j] <= 1.05 * distance[j - 1]);
      CHECK(distance.back() < distance.front());
    }
  }
}
