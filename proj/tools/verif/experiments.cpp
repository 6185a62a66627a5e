#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "symjac/errors.hpp"
#include "symjac/operators.hpp"
#include "symjac/pointwise.hpp"

namespace veriflab {

using namespace symjac;

namespace {

constexpr double pi = std::numbers::pi;

enum class GridKind { symmetric, lp, lp_half };

GridPtr cached(GridKind kind, const JacobiParams& params, double p, int count) {
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double, double, int>, GridPtr> cache;
  const auto key = std::make_tuple(static_cast<int>(kind), params.alpha(), params.beta(), p, count);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  GridPtr g;
  switch (kind) {
    case GridKind::symmetric:
      g = std::make_shared<const QuadratureGrid>(symmetric_rule(count, params));
      break;
    case GridKind::lp:
      g = lp_grid(params, p, count);
      break;
    case GridKind::lp_half:
      g = lp_halfline_grid(params, p, count);
      break;
  }
  cache.emplace(key, g);
  return g;
}

SymmExpansion unit(const JacobiParams& p, int n, int size) {
  SymmExpansion e{p, std::vector<double>(static_cast<std::size_t>(size), 0.0)};
  e.coeffs[static_cast<std::size_t>(n)] = 1.0;
  return e;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double weight_at(double a, double b, double t) { return ladder_weight_jet(a, b, t, 0).value(); }

JetFunction psi_function(double a, double b) {
  return [a, b](double t, std::size_t order) { return psi_jet(a, b, t, order); };
}

}  // namespace

GridPtr cached_symmetric_grid(const JacobiParams& params, int count) {
  return cached(GridKind::symmetric, params, 2.0, count);
}

GridPtr cached_lp_grid(const JacobiParams& params, double p, int count) {
  return cached(GridKind::lp, params, p, count);
}

GridPtr cached_lp_halfline_grid(const JacobiParams& params, double p, int count) {
  return cached(GridKind::lp_half, params, p, count);
}

GridPtr sup_grid() {
  static const GridPtr grid = [] {
    const int n = 1000;
    std::vector<double> nodes(n), weights(n, 2.0 * pi / n);
    for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = -pi * std::cos((i + 0.5) * pi / n);
    return std::make_shared<const QuadratureGrid>(std::move(nodes), std::move(weights), Interval::symmetric);
  }();
  return grid;
}

int grid_order(std::size_t size) { return default_quadrature_order(static_cast<int>(size)); }

GramResult gram_deviation(const JacobiParams& params, int count, int order) {
  GramResult r;
  const auto n = static_cast<std::size_t>(count);
  {
    const QuadratureGrid g = gauss_jacobi_rule(order, params);
    const JacobiFunctions fns(params, n);
    std::vector<std::vector<double>> v;
    for (std::size_t i = 0; i < g.size(); ++i) v.push_back(fns.evaluate(g.node(i)));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) s += g.weight(i) * v[i][a] * v[i][b];
        r.half_line = std::max(r.half_line, std::abs(s - (a == b ? 1.0 : 0.0)));
      }
    }
  }
  {
    const QuadratureGrid g = symmetric_rule(order, params);
    const SymmetrizedFunctions fns(params, n);
    std::vector<std::vector<double>> v(g.size(), std::vector<double>(n));
    for (std::size_t i = 0; i < g.size(); ++i) fns.evaluate(g.node(i), v[i]);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) s += g.weight(i) * v[i][a] * v[i][b];
        r.symmetric = std::max(r.symmetric, std::abs(s - (a == b ? 1.0 : 0.0)));
      }
    }
  }
  return r;
}

FourierResult fourier_deviation(int count, int nodes) {
  const JacobiParams f(-0.5, -0.5);
  const JacobiFunctions fns(f, static_cast<std::size_t>(count));
  FourierResult r;
  for (int i = 0; i < nodes; ++i) {
    const double t = -pi + (i + 0.5) * 2.0 * pi / nodes;
    const std::vector<double> v = fns.evaluate(t);
    for (int n = 1; n < count; ++n) {
      r.even = std::max(r.even, std::abs(v[static_cast<std::size_t>(n)] - std::sqrt(2.0 / pi) * std::cos(n * t)));
    }
    for (int n = 0; n < count; ++n) {
      r.odd = std::max(r.odd, std::abs(eval_Phi(2 * n + 1, f, t) - std::sin((n + 1) * t) / std::sqrt(pi)));
    }
  }
  return r;
}

double eigen_relation_deviation(const JacobiParams& params, int nmax) {
  const double a2 = params.shift() * params.shift();
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    const SymmExpansion dd = dunkl_power(unit(params, n, n + 1), 2);
    const double lambda = eigenvalue(bracket(n), params);
    for (std::size_t m = 0; m < dd.coeffs.size(); ++m) {
      const bool diag = static_cast<int>(m) == n;
      const double lhs = -dd.coeffs[m] + (diag ? a2 : 0.0);
      worst = std::max(worst, std::abs(lhs - (diag ? lambda : 0.0)) / std::max(1.0, lambda));
    }
  }
  return worst;
}

LadderFdResult ladder_fd_deviation(const JacobiParams& params, int nmax) {
  const JacobiParams up = params.shifted(1);
  std::vector<double> nodes;
  const QuadratureGrid rule = gauss_jacobi_rule(64, params);
  for (double t : rule.nodes()) {
    if (fd_admissible(t)) nodes.push_back(t);
  }
  LadderFdResult r;
  for (int n = 0; n <= nmax; ++n) {
    HalfLineExpansion h{params, std::vector<double>(static_cast<std::size_t>(n + 1), 0.0), Parity::even};
    h.coeffs.back() = 1.0;
    HalfLineExpansion k{up, std::vector<double>(static_cast<std::size_t>(n + 1), 0.0), Parity::odd};
    k.coeffs.back() = 1.0;
    const HalfLineExpansion d = ladder_D(h);
    const HalfLineExpansion ds = ladder_Dstar(k);
    // scale: size of the operator's terms and of the input; D phi_0 = 0, and at alpha = beta = -1/2 both terms vanish
    double scale_d = 0.0, diff_d = 0.0, scale_s = 0.0, diff_s = 0.0;
    for (double t : nodes) {
      const double w = weight_at(params.alpha(), params.beta(), t);
      const double slope_d = central_difference([&](double x) { return eval_phi(n, params, x); }, t);
      const double fd_d = slope_d - w * eval_phi(n, params, t);
      const double spec_d = n == 0 ? 0.0 : d.coeffs[static_cast<std::size_t>(n - 1)] * eval_phi(n - 1, up, t);
      scale_d = std::max(scale_d, std::abs(slope_d) + (1.0 + std::abs(w)) * std::abs(eval_phi(n, params, t)));
      diff_d = std::max(diff_d, std::abs(fd_d - spec_d));
      const double slope_s = central_difference([&](double x) { return eval_phi(n, up, x); }, t);
      const double fd_s = -slope_s - w * eval_phi(n, up, t);
      const double spec_s = ds.coeffs[static_cast<std::size_t>(n + 1)] * eval_phi(n + 1, params, t);
      scale_s = std::max(scale_s, std::abs(slope_s) + (1.0 + std::abs(w)) * std::abs(eval_phi(n, up, t)));
      diff_s = std::max(diff_s, std::abs(fd_s - spec_s));
    }
    r.d = std::max(r.d, diff_d / scale_d);
    r.dstar = std::max(r.dstar, diff_s / scale_s);
  }
  return r;
}

double composition_deviation(const SymmExpansion& f, double s, double t) {
  const SymmExpansion a = potential(potential(f, s), t);
  const SymmExpansion b = potential(f, s + t);
  double worst = 0.0;
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    if (b.coeffs[n] != 0.0) worst = std::max(worst, std::abs(a.coeffs[n] / b.coeffs[n] - 1.0));
  }
  return worst;
}

IsometryResult isometry_deviation(const SymmExpansion& f, double p, double s, double t) {
  const SymmExpansion lifted = potential(f, t);
  const SymmExpansion g1 = potential_preimage(lifted, s + t);
  const SymmExpansion g2 = potential_preimage(f, s);
  IsometryResult r;
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    if (g2.coeffs[n] != 0.0) r.coeff = std::max(r.coeff, std::abs(g1.coeffs[n] / g2.coeffs[n] - 1.0));
  }
  r.norm = std::abs(potential_norm_lp(lifted, p, s + t) / potential_norm_lp(f, p, s) - 1.0);
  return r;
}

double RefinedWindow::min_change() const { return std::abs(fine.min / coarse.min - 1.0); }
double RefinedWindow::max_change() const { return std::abs(fine.max / coarse.max - 1.0); }

RefinedWindow refined_window(const NormFunction& a, const NormFunction& b, const EnsembleSpec& spec,
                             unsigned threads) {
  RefinedWindow w;
  w.coarse = equivalence_ratio(a, b, spec, threads);
  EnsembleSpec doubled = spec;
  doubled.truncation = 2 * spec.truncation;
  w.fine = equivalence_ratio(a, b, doubled, threads);
  return w;
}

double potential_norm_lp(const SymmExpansion& f, double p, double s) {
  return potential_norm(f, p, s, cached_lp_grid(f.params, p, grid_order(f.coeffs.size())));
}

double split_potential_norm(const SymmExpansion& f, double p, double s) {
  const HalfLinePair<double> parts = to_halfline(f);
  const PotentialForm form = potential_form(f.params);
  const int order = grid_order(f.coeffs.size());
  const double e = halfline_potential_norm(parts.from_even, p, s,
                                           cached_lp_halfline_grid(f.params, p, order), form);
  const double o = halfline_potential_norm(parts.from_odd, p, s,
                                           cached_lp_halfline_grid(f.params.shifted(1), p, order), form);
  return std::pow(2.0 * (std::pow(e, p) + std::pow(o, p)), 1.0 / p);
}

double sobolev_norm_lp(const SymmExpansion& f, double p, int m) {
  return sobolev_norm(f, p, m, cached_lp_grid(f.params, p, grid_order(f.coeffs.size() + m)));
}

double dunkl_sobolev_norm_lp(const SymmExpansion& f, double p, int m) {
  const GridPtr grid = cached_lp_grid(f.params, p, grid_order(f.coeffs.size() + m));
  double total = 0.0;
  SymmExpansion power = f;
  for (int k = 0; k <= m; ++k) {
    total += lp_norm(synthesize(power, grid), p);
    power = dunkl_derivative(power);
  }
  return total;
}

double lq_norm(const SymmExpansion& f, double q) {
  if (std::isinf(q)) return lp_norm(synthesize(f, sup_grid()), q);
  return lp_norm(synthesize(f, cached_lp_grid(f.params, q, grid_order(f.coeffs.size()))), q);
}

double square_norm_lp(const SymmExpansion& f, const SquareFunctionSpec& spec, double p) {
  const GridPtr grid = cached_lp_grid(f.params, p, grid_order(f.coeffs.size()));
  return lp_norm(spec.variant() == SquareVariant::modified ? gfrak_modified(f, spec, grid) : gfrak(f, spec, grid), p);
}

SquareConstantResult square_constant(const JacobiParams& params, const SquareFunctionSpec& spec, int nmax) {
  const GridPtr grid = cached_symmetric_grid(params, grid_order(static_cast<std::size_t>(nmax + 1)));
  SquareConstantResult r;
  const double c = spec.eigen_constant();
  for (int n = 0; n <= nmax; ++n) {
    const double lambda = eigenvalue(bracket(n), params);
    if (lambda == 0.0) {
      r.per_index.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const double v = lp_norm(gfrak(unit(params, n, n + 1), spec, grid), 2.0) / std::pow(lambda, 0.5 * spec.gamma());
    r.per_index.push_back(v);
    r.worst = std::max(r.worst, std::abs(v / c - 1.0));
  }
  return r;
}

double square_oracle_deviation(const SymmExpansion& f, const SquareFunctionSpec& spec) {
  const GridPtr grid = cached_symmetric_grid(f.params, 24);
  const RealGridFunction a = spec.variant() == SquareVariant::modified ? gfrak_modified(f, spec, grid)
                                                                         : gfrak(f, spec, grid);
  const RealGridFunction b = square_function_by_quadrature(f, spec, grid);
  double scale = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max(scale, std::abs(b[i]));
    diff = std::max(diff, std::abs(a[i] - b[i]));
  }
  return scale == 0.0 ? diff : diff / scale;
}

WitnessOne witness_one(const JacobiParams& params, double p, double eps0) {
  const double al = params.alpha(), be = params.beta();
  const double a = -al - 1.0, b = -be - 1.0;
  WitnessOne r;
  r.hypothesis = al < 1.0 / p - 0.5 && be < 1.0 / p - 0.5;
  const JetFunction f = times_sign_power(psi_function(a, b), 1);
  const JetFunction df = apply_dunkl(f, al, be);
  auto value = [&](double t) { return f(t, 0).value(); };
  const QuadratureGrid rule = gauss_jacobi_rule(64, params);
  for (double t : rule.nodes()) {
    for (double s : {t, -t}) {
      const double w = weight_at(al, be, s);
      const double scale = std::abs(f(s, 1).derivative(1)) + std::abs(w * value(-s));
      r.residual = std::max(r.residual, std::abs(df(s, 0).value()) / scale);
      if (t < 0.05 || t > pi - 0.05) continue;
      const double slope = central_difference(value, s);
      r.fd_residual = std::max(r.fd_residual, std::abs(slope - w * value(-s)) / (std::abs(slope) + std::abs(w * value(-s))));
    }
    if (t < 0.05 || t > pi - 0.05) continue;
    const double closed = (-(al + 1.0) / std::tan(0.5 * t) + (be + 1.0) * std::tan(0.5 * t)) * value(t);
    const double fd = central_difference(value, t) - weight_at(al + 1.0, be + 1.0, t) * value(t);
    r.closed_form = std::max(r.closed_form, std::abs(fd - closed) / std::abs(closed));
  }
  r.lp = detect_divergence([&](double t) { return std::pow(std::abs(value(t)), p); }, eps0);
  r.derivative = detect_divergence(
      [&](double t) {
        const double d = (-(al + 1.0) / std::tan(0.5 * t) + (be + 1.0) * std::tan(0.5 * t)) * value(t);
        return std::pow(std::abs(d), p);
      },
      eps0);
  return r;
}

WitnessTwo witness_two(const JacobiParams& params, double p, double eps0) {
  const double al = params.alpha(), be = params.beta();
  const JacobiParams up = params.shifted(1);
  WitnessTwo r;
  r.hypothesis = al <= 0.5 - 1.0 / p || be <= 0.5 - 1.0 / p;

  const SymmExpansion g =
      analyze([&](double t) { return (t < 0 ? -1.0 : 1.0) * psi_weight(up, t); }, params, 8);
  const double gsize = max_abs(g.coeffs);
  for (int k : {1, 2}) {
    const HalfLinePair<double> d = symm_higher_derivative(g, k);
    r.spectral = std::max({r.spectral, max_abs(d.from_even.coeffs) / gsize, max_abs(d.from_odd.coeffs) / gsize});
  }

  const JetFunction half = psi_function(al + 1.0, be + 1.0);
  const JetFunction d1 = apply_D(half, al + 1.0, be + 1.0);
  const JetFunction d2 = apply_D(d1, al + 2.0, be + 2.0);
  auto value = [&](double t) { return half(t, 0).value(); };
  const QuadratureGrid rule = gauss_jacobi_rule(64, params);
  for (double t : rule.nodes()) {
    const Jet h = half(t, 2);
    const double w1 = weight_at(al + 1.0, be + 1.0, t), w2 = weight_at(al + 2.0, be + 2.0, t);
    const double w1p = ladder_weight_jet(al + 1.0, be + 1.0, t, 1).derivative(1);
    const double scale1 = std::abs(h.derivative(1)) + std::abs(w1 * h.value());
    const double scale2 = std::abs(h.derivative(2)) + (std::abs(w1) + std::abs(w2)) * std::abs(h.derivative(1)) +
                          (std::abs(w1p) + std::abs(w1 * w2)) * std::abs(h.value());
    r.pointwise = std::max({r.pointwise, std::abs(d1(t, 0).value()) / scale1, std::abs(d2(t, 0).value()) / scale2});
    if (fd_admissible(t)) {
      const double slope = central_difference(value, t);
      r.fd = std::max(r.fd, std::abs(slope - w1 * value(t)) / (std::abs(slope) + std::abs(w1 * value(t))));
    }
  }

  const JetFunction full = times_sign_power(half, 1);
  const JetFunction second = apply_dunkl(apply_dunkl(full, al, be), al + 1.0, be + 1.0);
  r.lp = detect_divergence([&](double t) { return std::pow(std::abs(value(t)), p); }, eps0);
  r.second = detect_divergence([&](double t) { return std::pow(std::abs(second(t, 0).value()), p); }, eps0);
  return r;
}

CrossWitness cross_witness(const JacobiParams& own, const JacobiParams& other, double p, double eps0) {
  const JetFunction f = psi_function(own.alpha(), own.beta());
  const JetFunction d_own = apply_D(f, own.alpha(), own.beta());
  const JetFunction d_other = apply_D(f, other.alpha(), other.beta());
  CrossWitness r;
  const QuadratureGrid rule = gauss_jacobi_rule(64, own);
  for (double t : rule.nodes()) {
    const Jet v = f(t, 1);
    const double scale = std::abs(v.derivative(1)) + std::abs(weight_at(own.alpha(), own.beta(), t) * v.value());
    r.residual = std::max(r.residual, std::abs(d_own(t, 0).value()) / scale);
  }
  r.lp = detect_divergence([&](double t) { return std::pow(std::abs(f(t, 0).value()), p); }, eps0);
  r.other = detect_divergence([&](double t) { return std::pow(std::abs(d_other(t, 0).value()), p); }, eps0);
  return r;
}

SchrodingerResult schrodinger_convergence(const SymmExpansion& f, int jmin, int jmax) {
  const GridPtr grid = cached_symmetric_grid(f.params, grid_order(f.coeffs.size()));
  const std::size_t m = f.coeffs.size();
  const SymmetrizedFunctions fns(f.params, m);
  std::vector<std::vector<double>> phi(grid->size(), std::vector<double>(m));
  for (std::size_t i = 0; i < grid->size(); ++i) fns.evaluate(grid->node(i), phi[i]);
  double lambda_max = 0.0, l1 = 0.0;
  for (std::size_t n = 0; n < m; ++n) {
    lambda_max = std::max(lambda_max, eigenvalue(bracket(static_cast<int>(n)), f.params));
    l1 += std::abs(f.coeffs[n]);
  }
  SchrodingerResult r;
  for (int j = jmin; j <= jmax; ++j) {
    const double t = std::ldexp(1.0, -j);
    const ComplexSymmExpansion u = schrodinger(f, t);
    double err = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
      std::complex<double> s = 0.0;
      for (std::size_t n = 0; n < m; ++n) s += (u.coeffs[n] - f.coeffs[n]) * phi[i][n];
      err = std::max(err, std::abs(s));
    }
    r.t.push_back(t);
    r.error.push_back(err);
    r.bound.push_back(t * lambda_max * l1);
    if (err > r.bound.back()) r.bound_holds = false;
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double k = static_cast<double>(r.t.size());
  for (std::size_t i = 0; i < r.t.size(); ++i) {
    const double x = std::log(r.t[i]), y = std::log(r.error[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  r.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return r;
}

double schrodinger_mixed_ratio(const SymmExpansion& f, double p, double q, double s) {
  const GridPtr grid = cached_lp_grid(f.params, p, grid_order(f.coeffs.size()));
  const std::size_t m = f.coeffs.size();
  const SymmetrizedFunctions fns(f.params, m);
  std::vector<std::vector<double>> phi(grid->size(), std::vector<double>(m));
  for (std::size_t i = 0; i < grid->size(); ++i) fns.evaluate(grid->node(i), phi[i]);
  std::vector<double> lambda(m);
  for (std::size_t n = 0; n < m; ++n) lambda[n] = eigenvalue(bracket(static_cast<int>(n)), f.params);
  // eigenvalue gaps are integers here, so this many midpoints resolve |u|^2 exactly in t
  const int steps = 2 * static_cast<int>(std::ceil(*std::max_element(lambda.begin(), lambda.end()))) + 16;
  const SpaceTimeFunction u(grid, steps, [&](std::size_t i, double t) {
    std::complex<double> acc = 0.0;
    for (std::size_t n = 0; n < m; ++n) acc += std::polar(f.coeffs[n], t * lambda[n]) * phi[i][n];
    return acc;
  });
  return mixed_norm(u, p, q) / potential_norm_lp(f, 2.0, s + 1.0 - 2.0 / q);
}

}  // namespace veriflab
