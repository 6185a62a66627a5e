#include "symjac/jacobi.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "symjac/errors.hpp"

namespace symjac {

JacobiParams::JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("Jacobi parameters must satisfy alpha > -1 and beta > -1 (got alpha=" +
                      std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");
  }
}

bool JacobiParams::zero_bottom_eigenvalue() const noexcept {
  return std::abs(alpha_ + beta_ + 1.0) <= 1e-12;
}

JacobiParams JacobiParams::shifted(int k) const { return {alpha_ + k, beta_ + k}; }

double JacobiParams::p_upper() const noexcept {
  if (alpha_ >= -0.5 && beta_ >= -0.5) return std::numeric_limits<double>::infinity();
  // alpha = -0.7 gives -1 / -0.19999999999999996; snap to a nearby rational with
  // small denominator so that endpoint exclusion works on decimal inputs.
  const double p = -1.0 / std::min(alpha_ + 0.5, beta_ + 0.5);
  for (int q = 1; q <= 1000; ++q) {
    const double r = std::round(p * q) / q;
    if (std::abs(p - r) <= 8.0 * std::numeric_limits<double>::epsilon() * p) return r;
  }
  return p;
}

double JacobiParams::p_lower() const noexcept {
  const double p = p_upper();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

bool JacobiParams::admits(double p) const noexcept { return p > p_lower() && p < p_upper(); }

void jacobi_poly_all(const JacobiParams& params, double x, std::span<double> out) {
  if (out.empty()) return;
  if (!(std::abs(x) <= 1.0)) throw DomainError("Jacobi polynomial argument must satisfy |x| <= 1");
  const double a = params.alpha();
  const double b = params.beta();
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  const double ab_sq = a * a - b * b;
  for (std::size_t i = 2; i < out.size(); ++i) {
    const double n = static_cast<double>(i);
    const double s = 2.0 * n + a + b;
    const double c1 = 2.0 * n * (n + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * ab_sq;
    const double c3 = (s - 2.0) * (s - 1.0) * s;
    const double c4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
    out[i] = ((c2 + c3 * x) * out[i - 1] - c4 * out[i - 2]) / c1;
  }
}

double jacobi_poly(int n, const JacobiParams& params, double x) {
  if (n < 0) throw DomainError("Jacobi polynomial degree must be nonnegative");
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  jacobi_poly_all(params, x, values);
  return values.back();
}

double psi_weight(const JacobiParams& params, double theta) {
  const double t = std::abs(theta);
  if (!(t < std::numbers::pi)) throw DomainError("theta must lie in the open interval (-pi, pi)");
  if (t == 0.0 && params.alpha() < -0.5) {
    throw SingularPointError("Psi is unbounded at theta = 0 when alpha < -1/2");
  }
  return std::pow(std::sin(0.5 * t), params.alpha() + 0.5) *
         std::pow(std::cos(0.5 * t), params.beta() + 0.5);
}

double eigenvalue(int n, const JacobiParams& params) noexcept {
  const double v = n + params.shift();
  return v * v;
}

namespace {

// log of h_n = int_{-1}^{1} (1-x)^a (1+x)^b P_n(x)^2 dx.
double log_jacobi_l2_norm(int n, double a, double b) {
  const double log2 = std::numbers::ln2;
  if (n == 0) {
    return (a + b + 1.0) * log2 + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
           std::lgamma(a + b + 2.0);
  }
  return (a + b + 1.0) * log2 - std::log(2.0 * n + a + b + 1.0) + std::lgamma(n + a + 1.0) +
         std::lgamma(n + b + 1.0) - std::lgamma(n + a + b + 1.0) - std::lgamma(n + 1.0);
}

}  // namespace

double norm_constant(int n, const JacobiParams& params) {
  if (n < 0) throw DomainError("index must be nonnegative");
  const double a = params.alpha();
  const double b = params.beta();
  // dx = 2^{a+b+1} Psi^2 dtheta under x = cos(theta)
  return std::exp(0.5 * (a + b + 1.0) * std::numbers::ln2 - 0.5 * log_jacobi_l2_norm(n, a, b));
}

double eval_phi(int n, const JacobiParams& params, double theta) {
  const double t = std::abs(theta);
  return norm_constant(n, params) * psi_weight(params, t) * jacobi_poly(n, params, std::cos(t));
}

JacobiFunctions::JacobiFunctions(const JacobiParams& params, std::size_t count)
    : params_(params), constants_(count) {
  for (std::size_t n = 0; n < count; ++n) constants_[n] = norm_constant(static_cast<int>(n), params);
}

void JacobiFunctions::evaluate(double theta, std::span<double> out) const {
  const std::size_t count = std::min(out.size(), constants_.size());
  if (count == 0) return;
  const double t = std::abs(theta);
  const double psi = psi_weight(params_, t);
  jacobi_poly_all(params_, std::cos(t), out.first(count));
  for (std::size_t n = 0; n < count; ++n) out[n] *= constants_[n] * psi;
}

std::vector<double> JacobiFunctions::evaluate(double theta) const {
  std::vector<double> out(constants_.size());
  evaluate(theta, out);
  return out;
}

}  // namespace symjac
