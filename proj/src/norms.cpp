#include "symjac/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "symjac/errors.hpp"
#include "symjac/operators.hpp"
#include "symjac/pointwise.hpp"

namespace symjac {

namespace {

void check_exponent(double p) {
  if (!(p >= 1.0)) throw DomainError("L^p norms need p >= 1");
}

template <class T>
double lp_norm_impl(const GridFunction<T>& f, double p) {
  check_exponent(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const T& v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += f.grid().weight(i) * std::pow(std::abs(f[i]), p);
  return std::pow(sum, 1.0 / p);
}

void check_admissible(const JacobiParams& params, double p) {
  if (!params.admits(p)) {
    throw AdmissibilityError("p = " + std::to_string(p) + " lies outside E(alpha, beta) = (" +
                             std::to_string(params.p_lower()) + ", " +
                             std::to_string(params.p_upper()) + ")");
  }
}

}  // namespace

double lp_norm(const RealGridFunction& f, double p) { return lp_norm_impl(f, p); }
double lp_norm(const ComplexGridFunction& f, double p) { return lp_norm_impl(f, p); }

double lp_norm_from_parts(const RealGridFunction& even_plus, const RealGridFunction& odd_plus,
                          double p) {
  check_exponent(p);
  if (even_plus.size() != odd_plus.size()) throw GridError("parts live on different grids");
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < even_plus.size(); ++i) {
      m = std::max({m, std::abs(even_plus[i] + odd_plus[i]), std::abs(even_plus[i] - odd_plus[i])});
    }
    return m;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < even_plus.size(); ++i) {
    sum += even_plus.grid().weight(i) * (std::pow(std::abs(even_plus[i] + odd_plus[i]), p) +
                                         std::pow(std::abs(even_plus[i] - odd_plus[i]), p));
  }
  return std::pow(sum, 1.0 / p);
}

JacobiParams lp_weight_params(const JacobiParams& params, double p) {
  check_exponent(p);
  if (std::isinf(p)) return params;
  const double a = 0.5 * p * (params.alpha() + 0.5) - 0.5;
  const double b = 0.5 * p * (params.beta() + 0.5) - 0.5;
  if (!(p < params.p_upper() && a > -1.0 && b > -1.0)) {
    throw DomainError("|f|^p is not integrable for p >= p(alpha, beta)");
  }
  return {a, b};
}

GridPtr lp_grid(const JacobiParams& params, double p, int count) {
  return std::make_shared<const QuadratureGrid>(symmetric_rule(count, lp_weight_params(params, p)));
}

GridPtr lp_halfline_grid(const JacobiParams& params, double p, int count) {
  return std::make_shared<const QuadratureGrid>(
      gauss_jacobi_rule(count, lp_weight_params(params, p)));
}

PotentialForm potential_form(const JacobiParams& params) noexcept {
  return params.zero_bottom_eigenvalue() ? PotentialForm::bessel : PotentialForm::riesz;
}

double potential_norm(const SymmExpansion& e, double p, double s, const GridPtr& grid) {
  check_admissible(e.params, p);
  if (!(s >= 0.0)) throw DomainError("potential order must be nonnegative");
  return lp_norm(synthesize(potential_preimage(e, s), grid), p);
}

double halfline_potential_norm(const HalfLineExpansion& h, double p, double s, const GridPtr& grid,
                               PotentialForm form) {
  check_exponent(p);
  HalfLineExpansion g = h;
  for (std::size_t n = 0; n < g.coeffs.size(); ++n) {
    const double lambda = eigenvalue(static_cast<int>(n), h.params);
    g.coeffs[n] *= form == PotentialForm::bessel ? std::pow(1.0 + lambda, 0.5 * s)
                                                 : std::pow(lambda, 0.5 * s);
  }
  return lp_norm(synthesize(g, grid), p);
}

RealGridFunction synthesize_pair(const HalfLinePair<double>& pair, const GridPtr& grid) {
  const RealGridFunction a = synthesize(pair.from_even, grid);
  const RealGridFunction b = synthesize(pair.from_odd, grid);
  std::vector<double> values(grid->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a[i] + b[i];
  return {grid, std::move(values)};
}

double sobolev_norm(const SymmExpansion& e, double p, int m, const GridPtr& grid) {
  check_admissible(e.params, p);
  if (m < 0) throw DomainError("Sobolev order must be nonnegative");
  double total = 0.0;
  for (int k = 0; k <= m; ++k) total += lp_norm(synthesize_pair(symm_higher_derivative(e, k), grid), p);
  return total;
}

std::pair<double, double> alt_sobolev_norms(const SymmExpansion& e, double p, int m,
                                            const GridPtr& grid) {
  check_admissible(e.params, p);
  if (m < 0) throw DomainError("Sobolev order must be nonnegative");
  double fixed = 0.0;
  SymmExpansion power = e;
  for (int k = 0; k <= m; ++k) {
    fixed += lp_norm(synthesize(power, grid), p);
    power = dunkl_derivative(power);
  }
  double variable = 0.0;
  JetFunction g = as_jet_function(e);
  for (int k = 0; k <= m; ++k) {
    std::vector<double> values(grid->size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = g(grid->node(i), 0).value();
    variable += lp_norm(RealGridFunction(grid, std::move(values)), p);
    g = apply_dunkl(g, e.params.alpha() + k, e.params.beta() + k);
  }
  return {fixed, variable};
}

Admissibility admissibility(const JacobiParams& params, double p, std::optional<double> q,
                            std::optional<double> sigma) {
  Admissibility out;
  out.p_lower = params.p_lower();
  out.p_upper = params.p_upper();
  out.p_in_range = params.admits(p);
  const bool half_or_more = params.alpha() >= -0.5 && params.beta() >= -0.5;
  if (sigma) {
    const double s = 2.0 * *sigma;
    out.lp_to_linf = half_or_more && 1.0 / p < s;
    out.continuity = half_or_more && s > 1.0 / p;
    if (q) {
      out.lp_to_lq = 1.0 / *q >= 1.0 / p - s;
      out.embedding = 1.0 / *q >= 1.0 / p - s;
    }
  }
  return out;
}

SpaceTimeFunction::SpaceTimeFunction(GridPtr theta_grid, int time_count,
                                     const std::function<std::complex<double>(std::size_t, double)>& f)
    : theta_(std::move(theta_grid)), times_(time_nodes(time_count)),
      time_weight_(2.0 * std::numbers::pi / time_count) {
  values_.resize(theta_->size() * times_.size());
  for (std::size_t i = 0; i < theta_->size(); ++i) {
    for (std::size_t j = 0; j < times_.size(); ++j) values_[i * times_.size() + j] = f(i, times_[j]);
  }
}

std::vector<double> SpaceTimeFunction::time_nodes(int count) {
  if (count < 1) throw DomainError("time grid needs at least one node");
  std::vector<double> t(static_cast<std::size_t>(count));
  const double h = 2.0 * std::numbers::pi / count;
  for (int j = 0; j < count; ++j) t[static_cast<std::size_t>(j)] = (j + 0.5) * h;
  return t;
}

double mixed_norm(const SpaceTimeFunction& f, double p, double q) {
  check_exponent(p);
  check_exponent(q);
  const QuadratureGrid& grid = f.theta_grid();
  std::vector<double> inner(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < f.time_count(); ++j) {
      const double a = std::abs(f(i, j));
      acc = std::isinf(q) ? std::max(acc, a) : acc + f.time_weight() * std::pow(a, q);
    }
    inner[i] = std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
  }
  if (std::isinf(p)) return *std::max_element(inner.begin(), inner.end());
  double outer = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) outer += grid.weight(i) * std::pow(inner[i], p);
  return std::pow(outer, 1.0 / p);
}

DivergenceReport detect_divergence(const std::function<double(double)>& integrand, double eps0,
                                   int levels, double threshold) {
  using boost::math::quadrature::gauss_kronrod;
  if (!(eps0 > 0.0 && eps0 < 0.5 * std::numbers::pi)) throw DomainError("eps0 must lie in (0, pi/2)");
  if (levels < 1) throw DomainError("divergence detection needs at least one refinement");
  DivergenceReport r;
  r.threshold = threshold;
  const double pi = std::numbers::pi;
  double eps = eps0;
  double value = gauss_kronrod<double, 61>::integrate(integrand, eps, pi - eps, 15, 1e-12);
  r.epsilon.push_back(eps);
  r.value.push_back(value);
  for (int j = 1; j <= levels; ++j) {
    const double next = 0.5 * eps;
    value += gauss_kronrod<double, 61>::integrate(integrand, next, eps, 10, 1e-12);
    value += gauss_kronrod<double, 61>::integrate(integrand, pi - eps, pi - next, 10, 1e-12);
    eps = next;
    r.growth.push_back(value / r.value.back());
    r.epsilon.push_back(eps);
    r.value.push_back(value);
  }
  r.divergent = std::all_of(r.growth.begin(), r.growth.end(),
                            [threshold](double g) { return g >= threshold; });
  return r;
}

}  // namespace symjac
