#include "symjac/square.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "symjac/errors.hpp"

namespace symjac {

SquareFunctionSpec::SquareFunctionSpec(double gamma, int k, SquareVariant variant)
    : gamma_(gamma), k_(k), variant_(variant) {
  if (k < 1) throw SpecError("square function order k must be a positive integer");
  if (!(gamma > 0.0 && gamma < k)) throw SpecError("square function needs 0 < gamma < k");
}

double SquareFunctionSpec::eigen_constant() const {
  const double a = k_ - gamma_;
  return std::exp((gamma_ - k_) * std::numbers::ln2 + 0.5 * std::lgamma(2.0 * a));
}

namespace {

// Modes entering the square function: their exponential rate and the expansion index.
struct Modes {
  std::vector<double> rate;
  std::vector<std::size_t> index;
};

Modes symmetric_modes(const SymmExpansion& e, bool modified) {
  Modes m;
  const bool zero_bottom = e.params.zero_bottom_eigenvalue();
  for (std::size_t n = 0; n < e.coeffs.size(); ++n) {
    const int j = bracket(static_cast<int>(n));
    if (!modified && zero_bottom && j == 0) continue;
    const double r = std::abs(j + e.params.shift());
    m.rate.push_back(modified ? 1.0 + r : r);
    m.index.push_back(n);
  }
  return m;
}

Modes halfline_modes(const HalfLineExpansion& h) {
  Modes m;
  const bool zero_bottom = h.params.zero_bottom_eigenvalue();
  for (std::size_t n = 0; n < h.coeffs.size(); ++n) {
    if (zero_bottom && n == 0) continue;
    m.rate.push_back(std::abs(static_cast<double>(n) + h.params.shift()));
    m.index.push_back(n);
  }
  return m;
}

// Q_{nm} = (r_n r_m)^k Gamma(2a) / (r_n + r_m)^{2a}, a = k - gamma, assembled in log space
std::vector<double> gamma_kernel(const std::vector<double>& rate, const SquareFunctionSpec& spec) {
  const std::size_t m = rate.size();
  const double a = spec.k() - spec.gamma();
  const double lg = std::lgamma(2.0 * a);
  std::vector<double> log_rate(m);
  for (std::size_t n = 0; n < m; ++n) log_rate[n] = std::log(rate[n]);
  std::vector<double> q(m * m);
  for (std::size_t n = 0; n < m; ++n) {
    for (std::size_t j = n; j < m; ++j) {
      const double v = std::exp(spec.k() * (log_rate[n] + log_rate[j]) + lg -
                                2.0 * a * std::log(rate[n] + rate[j]));
      q[n * m + j] = v;
      q[j * m + n] = v;
    }
  }
  return q;
}

template <class BasisEval>
RealGridFunction closed_form(const Modes& modes, const std::vector<double>& coeffs,
                             std::size_t basis_size, const SquareFunctionSpec& spec,
                             const GridPtr& grid, BasisEval&& eval) {
  const std::size_t m = modes.rate.size();
  const std::vector<double> q = gamma_kernel(modes.rate, spec);
  std::vector<double> basis(basis_size);
  std::vector<double> w(m);
  std::vector<double> values(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    eval(grid->node(i), basis);
    for (std::size_t n = 0; n < m; ++n) w[n] = coeffs[modes.index[n]] * basis[modes.index[n]];
    double sum = 0.0;
    for (std::size_t n = 0; n < m; ++n) {
      double row = 0.0;
      for (std::size_t j = 0; j < m; ++j) row += q[n * m + j] * w[j];
      sum += w[n] * row;
    }
    values[i] = std::sqrt(std::max(sum, 0.0));
  }
  return {grid, std::move(values)};
}

void require_variant(const SquareFunctionSpec& spec, SquareVariant v, const char* what) {
  if (spec.variant() != v) throw SpecError(std::string("square function variant mismatch: ") + what);
}

double sign_of(double t) noexcept { return t < 0.0 ? -1.0 : 1.0; }

RealGridFunction symmetric_closed_form(const SymmExpansion& e, const SquareFunctionSpec& spec,
                                       const GridPtr& grid, bool modified) {
  const Modes modes = symmetric_modes(e, modified);
  const SymmetrizedFunctions fns(e.params, e.coeffs.size());
  return closed_form(modes, e.coeffs, e.coeffs.size(), spec, grid,
                     [&](double t, std::vector<double>& out) { fns.evaluate(t, out); });
}

template <class BasisEval>
RealGridFunction by_quadrature(const Modes& modes, const std::vector<double>& coeffs,
                               std::size_t basis_size, const SquareFunctionSpec& spec,
                               const GridPtr& grid, BasisEval&& eval) {
  using boost::math::quadrature::gauss_kronrod;
  const std::size_t m = modes.rate.size();
  const double a = spec.k() - spec.gamma();
  std::vector<double> basis(basis_size);
  std::vector<double> w(m);
  std::vector<double> values(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    eval(grid->node(i), basis);
    for (std::size_t n = 0; n < m; ++n) {
      w[n] = coeffs[modes.index[n]] * basis[modes.index[n]] * std::pow(modes.rate[n], spec.k());
    }
    auto integrand = [&](double u) {
      const double t = std::exp(u);
      double s = 0.0;
      for (std::size_t n = 0; n < m; ++n) s += w[n] * std::exp(-t * modes.rate[n]);
      return std::exp(2.0 * a * u) * s * s;
    };
    const double v = gauss_kronrod<double, 61>::integrate(integrand, -30.0, 10.0, 20, 1e-14);
    values[i] = std::sqrt(std::max(v, 0.0));
  }
  return {grid, std::move(values)};
}

}  // namespace

RealGridFunction gfrak(const SymmExpansion& e, const SquareFunctionSpec& spec, const GridPtr& grid) {
  require_variant(spec, SquareVariant::plain, "gfrak needs the plain variant");
  return symmetric_closed_form(e, spec, grid, false);
}

RealGridFunction gfrak_modified(const SymmExpansion& e, const SquareFunctionSpec& spec,
                                const GridPtr& grid) {
  require_variant(spec, SquareVariant::modified, "gfrak_modified needs the modified variant");
  return symmetric_closed_form(e, spec, grid, true);
}

RealGridFunction g_halfline(const HalfLineExpansion& h, const SquareFunctionSpec& spec,
                            const GridPtr& grid) {
  require_variant(spec, SquareVariant::halfline, "g_halfline needs the halfline variant");
  const Modes modes = halfline_modes(h);
  const JacobiFunctions fns(h.params, h.coeffs.size());
  return closed_form(modes, h.coeffs, h.coeffs.size(), spec, grid,
                     [&](double t, std::vector<double>& out) {
                       fns.evaluate(t, out);
                       if (h.parity == Parity::odd) {
                         for (double& v : out) v *= sign_of(t);
                       }
                     });
}

RealGridFunction square_function_by_quadrature(const SymmExpansion& e, const SquareFunctionSpec& spec,
                                               const GridPtr& grid) {
  if (spec.variant() == SquareVariant::halfline) {
    throw SpecError("the halfline variant applies to half-line expansions");
  }
  const Modes modes = symmetric_modes(e, spec.variant() == SquareVariant::modified);
  const SymmetrizedFunctions fns(e.params, e.coeffs.size());
  return by_quadrature(modes, e.coeffs, e.coeffs.size(), spec, grid,
                       [&](double t, std::vector<double>& out) { fns.evaluate(t, out); });
}

RealGridFunction square_function_by_quadrature(const HalfLineExpansion& h,
                                               const SquareFunctionSpec& spec, const GridPtr& grid) {
  require_variant(spec, SquareVariant::halfline, "half-line expansions need the halfline variant");
  const Modes modes = halfline_modes(h);
  const JacobiFunctions fns(h.params, h.coeffs.size());
  return by_quadrature(modes, h.coeffs, h.coeffs.size(), spec, grid,
                       [&](double t, std::vector<double>& out) {
                         fns.evaluate(t, out);
                         if (h.parity == Parity::odd) {
                           for (double& v : out) v *= sign_of(t);
                         }
                       });
}

}  // namespace symjac
