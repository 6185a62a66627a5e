#include "symjac/operators.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "symjac/errors.hpp"

namespace symjac {

namespace {

std::string format_label(const char* fmt, double a, double b = 0.0) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

}  // namespace

SpectralMultiplier::SpectralMultiplier(std::function<double(double)> symbol, std::string description)
    : symbol_(std::move(symbol)), description_(std::move(description)) {}

std::vector<double> SpectralMultiplier::symmetric_table(const JacobiParams& params,
                                                        std::size_t count) const {
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    out[n] = symbol_(eigenvalue(bracket(static_cast<int>(n)), params));
  }
  return out;
}

std::vector<double> SpectralMultiplier::halfline_table(const JacobiParams& params,
                                                       std::size_t count) const {
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = symbol_(eigenvalue(static_cast<int>(n), params));
  return out;
}

template <class T>
BasicSymmExpansion<T> SpectralMultiplier::apply(const BasicSymmExpansion<T>& e) const {
  const std::vector<double> table = symmetric_table(e.params, e.coeffs.size());
  BasicSymmExpansion<T> out{e.params, e.coeffs};
  for (std::size_t n = 0; n < table.size(); ++n) out.coeffs[n] *= table[n];
  return out;
}

template <class T>
BasicHalfLineExpansion<T> SpectralMultiplier::apply(const BasicHalfLineExpansion<T>& h) const {
  const std::vector<double> table = halfline_table(h.params, h.coeffs.size());
  BasicHalfLineExpansion<T> out{h.params, h.coeffs, h.parity};
  for (std::size_t n = 0; n < table.size(); ++n) out.coeffs[n] *= table[n];
  return out;
}

SpectralMultiplier SpectralMultiplier::riesz(double sigma) {
  return {[sigma](double lambda) { return std::pow(lambda, -sigma); },
          format_label("riesz lambda^(-%.17g)", sigma)};
}

SpectralMultiplier SpectralMultiplier::bessel(double sigma) {
  return {[sigma](double lambda) { return std::pow(1.0 + lambda, -sigma); },
          format_label("bessel (1+lambda)^(-%.17g)", sigma)};
}

SpectralMultiplier SpectralMultiplier::modified(double s) {
  return {[s](double lambda) { return std::pow(1.0 + std::sqrt(lambda), -s); },
          format_label("modified (1+sqrt(lambda))^(-%.17g)", s)};
}

SpectralMultiplier SpectralMultiplier::poisson(double t, int derivative_order) {
  if (derivative_order < 0) throw DomainError("derivative order must be nonnegative");
  return {[t, derivative_order](double lambda) {
            const double r = std::sqrt(lambda);
            double v = std::exp(-t * r);
            for (int j = 0; j < derivative_order; ++j) v *= -r;
            return v;
          },
          format_label("poisson t=%.17g k=%.17g", t, derivative_order)};
}

SpectralMultiplier SpectralMultiplier::potential(const JacobiParams& params, double s) {
  if (params.zero_bottom_eigenvalue()) {
    return {[s](double lambda) { return std::pow(1.0 + lambda, -0.5 * s); },
            format_label("bessel (1+lambda)^(-%.17g) [alpha+beta=-1]", 0.5 * s)};
  }
  return riesz(0.5 * s);
}

SymmExpansion riesz_potential(const SymmExpansion& e, double sigma) {
  if (e.params.zero_bottom_eigenvalue()) {
    throw UnsupportedParametersError("Riesz potentials need alpha + beta != -1 (bottom eigenvalue 0)");
  }
  if (!(sigma > 0.0)) throw DomainError("potential order must be positive");
  return SpectralMultiplier::riesz(sigma).apply(e);
}

SymmExpansion bessel_potential(const SymmExpansion& e, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("potential order must be positive");
  return SpectralMultiplier::bessel(sigma).apply(e);
}

SymmExpansion modified_riesz_potential(const SymmExpansion& e, double s) {
  if (!(s > 0.0)) throw DomainError("potential order must be positive");
  return SpectralMultiplier::modified(s).apply(e);
}

SymmExpansion poisson(const SymmExpansion& e, double t) {
  if (!(t >= 0.0)) throw DomainError("Poisson time must be nonnegative");
  return SpectralMultiplier::poisson(t).apply(e);
}

SymmExpansion poisson_dt(const SymmExpansion& e, double t, int k) {
  if (!(t > 0.0)) throw DomainError("Poisson derivative needs t > 0");
  return SpectralMultiplier::poisson(t, k).apply(e);
}

ComplexSymmExpansion schrodinger(const ComplexSymmExpansion& e, double t) {
  ComplexSymmExpansion out{e.params, e.coeffs};
  for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
    const double phase = t * eigenvalue(bracket(static_cast<int>(n)), e.params);
    out.coeffs[n] *= std::polar(1.0, phase);
  }
  return out;
}

ComplexSymmExpansion schrodinger(const SymmExpansion& e, double t) {
  ComplexSymmExpansion c{e.params, {e.coeffs.begin(), e.coeffs.end()}};
  return schrodinger(c, t);
}

template <class T>
BasicSymmExpansion<T> potential(const BasicSymmExpansion<T>& e, double s) {
  return SpectralMultiplier::potential(e.params, s).apply(e);
}

template <class T>
BasicSymmExpansion<T> potential_preimage(const BasicSymmExpansion<T>& e, double s) {
  return SpectralMultiplier::potential(e.params, -s).apply(e);
}

HalfLineExpansion potential_preimage(const HalfLineExpansion& h, double s) {
  return SpectralMultiplier::potential(h.params, -s).apply(h);
}

double ladder_constant(int n, const JacobiParams& params) {
  if (n < 0) throw DomainError("ladder index must be nonnegative");
  if (n == 0) return 0.0;
  return std::sqrt(n * (n + params.alpha() + params.beta() + 1.0));
}

LadderCoefficients::LadderCoefficients(const JacobiParams& params, std::size_t count)
    : params_(params), table_(count) {
  for (std::size_t n = 0; n < count; ++n) table_[n] = ladder_constant(static_cast<int>(n), params);
}

HalfLineExpansion ladder_D(const HalfLineExpansion& h) {
  const std::size_t m = h.coeffs.size();
  HalfLineExpansion out{h.params.shifted(1), std::vector<double>(m > 0 ? m - 1 : 0),
                        flip(h.parity)};
  for (std::size_t n = 1; n < m; ++n) {
    out.coeffs[n - 1] = -ladder_constant(static_cast<int>(n), h.params) * h.coeffs[n];
  }
  return out;
}

HalfLineExpansion ladder_Dstar(const HalfLineExpansion& h) {
  const JacobiParams lower(h.params.alpha() - 1.0, h.params.beta() - 1.0);
  const std::size_t m = h.coeffs.size();
  HalfLineExpansion out{lower, std::vector<double>(m + 1, 0.0), flip(h.parity)};
  for (std::size_t n = 0; n < m; ++n) {
    out.coeffs[n + 1] = -ladder_constant(static_cast<int>(n) + 1, lower) * h.coeffs[n];
  }
  return out;
}

SymmExpansion dunkl_derivative(const SymmExpansion& e) {
  const std::size_t m = e.coeffs.size();
  SymmExpansion out{e.params, std::vector<double>(m + 1, 0.0)};
  for (std::size_t j = 0; j < m; ++j) {
    const int n = static_cast<int>(j / 2);
    if (j % 2 == 0) {
      if (n > 0) out.coeffs[j - 1] += -ladder_constant(n, e.params) * e.coeffs[j];
    } else {
      out.coeffs[j + 1] += ladder_constant(n + 1, e.params) * e.coeffs[j];
    }
  }
  return out;
}

SymmExpansion dunkl_power(const SymmExpansion& e, int k) {
  if (k < 0) throw DomainError("derivative order must be nonnegative");
  SymmExpansion out = e;
  for (int j = 0; j < k; ++j) out = dunkl_derivative(out);
  return out;
}

HalfLineExpansion var_index_derivative(const HalfLineExpansion& h, int k) {
  if (k < 0) throw DomainError("derivative order must be nonnegative");
  HalfLineExpansion out = h;
  for (int j = 0; j < k; ++j) out = ladder_D(out);
  return out;
}

HalfLinePair<double> symm_higher_derivative(const SymmExpansion& e, int k, bool twisted) {
  HalfLinePair<double> parts = to_halfline(e);
  HalfLinePair<double> out{var_index_derivative(parts.from_even, k),
                           var_index_derivative(parts.from_odd, k)};
  if (twisted && k % 2 != 0) {
    out.from_even.parity = flip(out.from_even.parity);
    out.from_odd.parity = flip(out.from_odd.parity);
  }
  return out;
}

SymmExpansion riesz_transform_Dk(const SymmExpansion& e, int k) {
  if (k < 1) throw DomainError("Riesz transform order must be positive");
  return dunkl_power(potential(e, static_cast<double>(k)), k);
}

HalfLinePair<double> riesz_transform_frak(const SymmExpansion& e, int k, bool twisted) {
  if (k < 1) throw DomainError("Riesz transform order must be positive");
  return symm_higher_derivative(potential(e, static_cast<double>(k)), k, twisted);
}

Eigen::MatrixXd riesz_transform_matrix(const JacobiParams& params, int count, int k) {
  if (count < 1) throw DomainError("matrix size must be positive");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(count + k, count);
  for (int n = 0; n < count; ++n) {
    SymmExpansion unit{params, std::vector<double>(static_cast<std::size_t>(count), 0.0)};
    unit.coeffs[static_cast<std::size_t>(n)] = 1.0;
    const SymmExpansion col = riesz_transform_Dk(unit, k);
    for (std::size_t r = 0; r < col.coeffs.size(); ++r) out(static_cast<Eigen::Index>(r), n) = col.coeffs[r];
  }
  return out;
}

template <class T>
std::vector<T> padded(const std::vector<T>& coeffs, std::size_t length) {
  std::vector<T> out(length, T{});
  for (std::size_t n = 0; n < std::min(length, coeffs.size()); ++n) out[n] = coeffs[n];
  return out;
}

using cplx = std::complex<double>;

template BasicSymmExpansion<double> SpectralMultiplier::apply(const BasicSymmExpansion<double>&) const;
template BasicSymmExpansion<cplx> SpectralMultiplier::apply(const BasicSymmExpansion<cplx>&) const;
template BasicHalfLineExpansion<double> SpectralMultiplier::apply(
    const BasicHalfLineExpansion<double>&) const;
template BasicHalfLineExpansion<cplx> SpectralMultiplier::apply(
    const BasicHalfLineExpansion<cplx>&) const;
template BasicSymmExpansion<double> potential(const BasicSymmExpansion<double>&, double);
template BasicSymmExpansion<cplx> potential(const BasicSymmExpansion<cplx>&, double);
template BasicSymmExpansion<double> potential_preimage(const BasicSymmExpansion<double>&, double);
template BasicSymmExpansion<cplx> potential_preimage(const BasicSymmExpansion<cplx>&, double);
template std::vector<double> padded(const std::vector<double>&, std::size_t);
template std::vector<cplx> padded(const std::vector<cplx>&, std::size_t);

}  // namespace symjac
