#include "symjac/basis.hpp"

#include <cmath>
#include <numbers>

#include "symjac/errors.hpp"

namespace symjac {

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

double sign_of(double t) noexcept { return t < 0.0 ? -1.0 : 1.0; }

}  // namespace

double eval_Phi(int n, const JacobiParams& params, double theta) {
  if (n < 0) throw DomainError("index must be nonnegative");
  if (theta == 0.0) throw SingularPointError("Phi_n is evaluated only on (-pi, pi) \\ {0}");
  if (n % 2 == 0) return inv_sqrt2 * eval_phi(n / 2, params, theta);
  return inv_sqrt2 * sign_of(theta) * eval_phi((n - 1) / 2, params.shifted(1), theta);
}

SymmetrizedFunctions::SymmetrizedFunctions(const JacobiParams& params, std::size_t count)
    : count_(count), even_(params, (count + 1) / 2), odd_(params.shifted(1), count / 2) {}

void SymmetrizedFunctions::evaluate(double theta, std::span<double> out) const {
  const std::size_t count = std::min(out.size(), count_);
  std::vector<double> even(even_.size());
  std::vector<double> odd(odd_.size());
  even_.evaluate(theta, even);
  odd_.evaluate(theta, odd);
  const double s = sign_of(theta);
  for (std::size_t n = 0; n < count; ++n) {
    out[n] = n % 2 == 0 ? inv_sqrt2 * even[n / 2] : inv_sqrt2 * s * odd[n / 2];
  }
}

template <class T>
GridFunction<T> reflect(const GridFunction<T>& f) {
  const QuadratureGrid& grid = f.grid();
  if (!grid.is_mirror_symmetric()) throw GridError("reflect needs a mirror-symmetric grid");
  std::vector<T> values(f.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = f[grid.mirror_index(i)];
  return {f.grid_ptr(), std::move(values)};
}

template <class T>
std::pair<GridFunction<T>, GridFunction<T>> split_even_odd(const GridFunction<T>& f) {
  const QuadratureGrid& grid = f.grid();
  auto half = std::make_shared<const QuadratureGrid>(grid.positive_half());
  const std::size_t n = half->size();
  std::vector<T> even(n);
  std::vector<T> odd(n);
  for (std::size_t i = 0; i < n; ++i) {
    const T& plus = f[n + i];
    const T& minus = f[n - 1 - i];
    even[i] = (plus + minus) / 2.0;
    odd[i] = (plus - minus) / 2.0;
  }
  return {GridFunction<T>(half, std::move(even)), GridFunction<T>(std::move(half), std::move(odd))};
}

SymmExpansion analyze(const std::function<double(double)>& f, const JacobiParams& params,
                      int count, int quadrature_order) {
  if (count < 1) throw DomainError("analysis needs a positive truncation");
  const int order = quadrature_order > 0 ? quadrature_order : default_quadrature_order(count);
  const std::size_t even_count = (static_cast<std::size_t>(count) + 1) / 2;
  const std::size_t odd_count = static_cast<std::size_t>(count) / 2;
  if (static_cast<std::size_t>(order) < even_count + 1) {
    throw ConfigurationError("quadrature order too small for the requested truncation");
  }

  SymmExpansion out{params, std::vector<double>(static_cast<std::size_t>(count), 0.0)};
  const double root2 = std::numbers::sqrt2;

  const QuadratureGrid even_rule = gauss_jacobi_rule(order, params);
  const JacobiFunctions even_fns(params, even_count);
  std::vector<double> phi(even_count);
  for (std::size_t i = 0; i < even_rule.size(); ++i) {
    const double t = even_rule.node(i);
    const double fe = 0.5 * (f(t) + f(-t));
    even_fns.evaluate(t, phi);
    for (std::size_t n = 0; n < even_count; ++n) {
      out.coeffs[2 * n] += even_rule.weight(i) * fe * phi[n];
    }
  }
  if (odd_count > 0) {
    const JacobiParams shifted = params.shifted(1);
    const QuadratureGrid odd_rule = gauss_jacobi_rule(order, shifted);
    const JacobiFunctions odd_fns(shifted, odd_count);
    phi.assign(odd_count, 0.0);
    for (std::size_t i = 0; i < odd_rule.size(); ++i) {
      const double t = odd_rule.node(i);
      const double fo = 0.5 * (f(t) - f(-t));
      odd_fns.evaluate(t, phi);
      for (std::size_t n = 0; n < odd_count; ++n) {
        out.coeffs[2 * n + 1] += odd_rule.weight(i) * fo * phi[n];
      }
    }
  }
  for (double& b : out.coeffs) b *= root2;
  return out;
}

SymmExpansion analyze(const RealGridFunction& f, const JacobiParams& params, int count) {
  if (count < 1) throw DomainError("analysis needs a positive truncation");
  const auto [even, odd] = split_even_odd(f);
  const QuadratureGrid& half = even.grid();
  // even integrands have degree <= count - 1, odd ones <= count (times (1 - x^2))
  if (2 * half.size() < static_cast<std::size_t>(count) + 2) {
    throw ConfigurationError("grid has too few nodes for the requested truncation");
  }
  const std::size_t even_count = (static_cast<std::size_t>(count) + 1) / 2;
  const std::size_t odd_count = static_cast<std::size_t>(count) / 2;
  const JacobiFunctions even_fns(params, even_count);
  const JacobiFunctions odd_fns(params.shifted(1), odd_count);
  SymmExpansion out{params, std::vector<double>(static_cast<std::size_t>(count), 0.0)};
  std::vector<double> pe(even_count);
  std::vector<double> po(odd_count);
  for (std::size_t i = 0; i < half.size(); ++i) {
    const double t = half.node(i);
    const double w = half.weight(i);
    even_fns.evaluate(t, pe);
    odd_fns.evaluate(t, po);
    for (std::size_t n = 0; n < even_count; ++n) out.coeffs[2 * n] += w * even[i] * pe[n];
    for (std::size_t n = 0; n < odd_count; ++n) out.coeffs[2 * n + 1] += w * odd[i] * po[n];
  }
  for (double& b : out.coeffs) b *= std::numbers::sqrt2;
  return out;
}

template <class T>
GridFunction<T> synthesize(const BasicSymmExpansion<T>& e, const GridPtr& grid) {
  const SymmetrizedFunctions fns(e.params, e.coeffs.size());
  std::vector<double> phi(e.coeffs.size());
  std::vector<T> values(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    fns.evaluate(grid->node(i), phi);
    T sum{};
    for (std::size_t n = 0; n < phi.size(); ++n) sum += e.coeffs[n] * phi[n];
    values[i] = sum;
  }
  return {grid, std::move(values)};
}

template <class T>
GridFunction<T> synthesize(const BasicHalfLineExpansion<T>& h, const GridPtr& grid) {
  const JacobiFunctions fns(h.params, h.coeffs.size());
  std::vector<double> phi(h.coeffs.size());
  std::vector<T> values(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double t = grid->node(i);
    fns.evaluate(t, phi);
    T sum{};
    for (std::size_t n = 0; n < phi.size(); ++n) sum += h.coeffs[n] * phi[n];
    values[i] = h.parity == Parity::odd ? sign_of(t) * sum : sum;
  }
  return {grid, std::move(values)};
}

template <class T>
HalfLinePair<T> to_halfline(const BasicSymmExpansion<T>& e) {
  const std::size_t m = e.coeffs.size();
  HalfLinePair<T> out{{e.params, std::vector<T>((m + 1) / 2), Parity::even},
                      {e.params.shifted(1), std::vector<T>(m / 2), Parity::odd}};
  for (std::size_t n = 0; n < m; ++n) {
    const T a = e.coeffs[n] * inv_sqrt2;
    if (n % 2 == 0) {
      out.from_even.coeffs[n / 2] = a;
    } else {
      out.from_odd.coeffs[n / 2] = a;
    }
  }
  return out;
}

template <class T>
std::optional<BasicSymmExpansion<T>> recombine(const BasicHalfLineExpansion<T>& first,
                                               const BasicHalfLineExpansion<T>& second) {
  const BasicHalfLineExpansion<T>* even = &first;
  const BasicHalfLineExpansion<T>* odd = &second;
  if (even->parity == Parity::odd) std::swap(even, odd);
  if (even->parity != Parity::even || odd->parity != Parity::odd) return std::nullopt;
  if (!(odd->params == even->params.shifted(1))) return std::nullopt;
  const std::size_t m = std::max(2 * even->coeffs.size(), 2 * odd->coeffs.size());
  BasicSymmExpansion<T> out{even->params, std::vector<T>(m)};
  for (std::size_t n = 0; n < even->coeffs.size(); ++n) {
    out.coeffs[2 * n] = even->coeffs[n] * std::numbers::sqrt2;
  }
  for (std::size_t n = 0; n < odd->coeffs.size(); ++n) {
    out.coeffs[2 * n + 1] = odd->coeffs[n] * std::numbers::sqrt2;
  }
  return out;
}

using cplx = std::complex<double>;

template GridFunction<double> reflect(const GridFunction<double>&);
template GridFunction<cplx> reflect(const GridFunction<cplx>&);
template std::pair<GridFunction<double>, GridFunction<double>> split_even_odd(
    const GridFunction<double>&);
template std::pair<GridFunction<cplx>, GridFunction<cplx>> split_even_odd(const GridFunction<cplx>&);
template GridFunction<double> synthesize(const BasicSymmExpansion<double>&, const GridPtr&);
template GridFunction<cplx> synthesize(const BasicSymmExpansion<cplx>&, const GridPtr&);
template GridFunction<double> synthesize(const BasicHalfLineExpansion<double>&, const GridPtr&);
template GridFunction<cplx> synthesize(const BasicHalfLineExpansion<cplx>&, const GridPtr&);
template HalfLinePair<double> to_halfline(const BasicSymmExpansion<double>&);
template HalfLinePair<cplx> to_halfline(const BasicSymmExpansion<cplx>&);
template std::optional<BasicSymmExpansion<double>> recombine(const BasicHalfLineExpansion<double>&,
                                                             const BasicHalfLineExpansion<double>&);
template std::optional<BasicSymmExpansion<cplx>> recombine(const BasicHalfLineExpansion<cplx>&,
                                                           const BasicHalfLineExpansion<cplx>&);

}  // namespace symjac
