#include "symjac/pointwise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "symjac/errors.hpp"

namespace symjac {

Jet::Jet(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(0.0);
}

Jet Jet::constant(double value, std::size_t order) {
  Jet j(order);
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(double at, std::size_t order) {
  Jet j(order);
  j.c_[0] = at;
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

double Jet::derivative(std::size_t j) const {
  double f = 1.0;
  for (std::size_t i = 2; i <= j; ++i) f *= static_cast<double>(i);
  return f * c_.at(j);
}

Jet Jet::differentiated() const {
  if (c_.size() < 2) throw DomainError("cannot differentiate a jet of order 0");
  Jet out(order() - 1);
  for (std::size_t j = 1; j < c_.size(); ++j) out.c_[j - 1] = static_cast<double>(j) * c_[j];
  return out;
}

Jet Jet::mirrored() const {
  Jet out = *this;
  for (std::size_t j = 1; j < c_.size(); j += 2) out.c_[j] = -out.c_[j];
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

Jet& Jet::operator*=(double a) {
  for (double& v : c_) v *= a;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const std::size_t k = std::min(a.order(), b.order());
  Jet out(k);
  for (std::size_t i = 0; i <= k; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += a.c_[j] * b.c_[i - j];
    out.c_[i] = s;
  }
  return out;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b.c_[0] == 0.0) throw DomainError("jet division by a series vanishing at the point");
  const std::size_t k = std::min(a.order(), b.order());
  Jet out(k);
  for (std::size_t i = 0; i <= k; ++i) {
    double s = a.c_[i];
    for (std::size_t j = 1; j <= i; ++j) s -= b.c_[j] * out.c_[i - j];
    out.c_[i] = s / b.c_[0];
  }
  return out;
}

namespace {

// s = sin u, c = cos u together: k s_k = sum j u_j c_{k-j}, k c_k = -sum j u_j s_{k-j}
std::pair<Jet, Jet> sincos(const Jet& u) {
  const std::size_t k = u.order();
  Jet s(k);
  Jet c(k);
  s[0] = std::sin(u[0]);
  c[0] = std::cos(u[0]);
  for (std::size_t i = 1; i <= k; ++i) {
    double ss = 0.0;
    double cc = 0.0;
    for (std::size_t j = 1; j <= i; ++j) {
      ss += static_cast<double>(j) * u[j] * c[i - j];
      cc -= static_cast<double>(j) * u[j] * s[i - j];
    }
    s[i] = ss / static_cast<double>(i);
    c[i] = cc / static_cast<double>(i);
  }
  return {std::move(s), std::move(c)};
}

}  // namespace

Jet sin(const Jet& u) { return sincos(u).first; }
Jet cos(const Jet& u) { return sincos(u).second; }

Jet exp(const Jet& u) {
  const std::size_t k = u.order();
  Jet e(k);
  e[0] = std::exp(u[0]);
  for (std::size_t i = 1; i <= k; ++i) {
    double s = 0.0;
    for (std::size_t j = 1; j <= i; ++j) s += static_cast<double>(j) * u[j] * e[i - j];
    e[i] = s / static_cast<double>(i);
  }
  return e;
}

Jet log(const Jet& u) {
  if (!(u[0] > 0.0)) throw DomainError("jet logarithm needs a positive value");
  const std::size_t k = u.order();
  Jet l(k);
  l[0] = std::log(u[0]);
  for (std::size_t i = 1; i <= k; ++i) {
    double s = static_cast<double>(i) * u[i];
    for (std::size_t j = 1; j < i; ++j) s -= static_cast<double>(j) * l[j] * u[i - j];
    l[i] = s / (static_cast<double>(i) * u[0]);
  }
  return l;
}

Jet pow(const Jet& u, double r) {
  if (r == 0.0) return Jet::constant(1.0, u.order());
  return exp(r * log(u));
}

namespace {

double sign_of(double t) noexcept { return t < 0.0 ? -1.0 : 1.0; }

void check_theta(double theta) {
  if (theta == 0.0) throw SingularPointError("jets are taken away from theta = 0");
  if (!(std::abs(theta) < std::numbers::pi)) throw DomainError("theta must lie in (-pi, pi)");
}

// sum_n a_n c_n Psi P_n(cos t), evenly extended
Jet phi_series_jet(const JacobiParams& params, const std::vector<double>& a, double theta,
                   std::size_t order) {
  Jet sum(order);
  if (a.empty()) return sum;
  const JacobiFunctions fns(params, a.size());
  const Jet v = Jet::variable(theta, order);
  const Jet x = cos(v);
  const double al = params.alpha();
  const double be = params.beta();
  const double ab_sq = al * al - be * be;
  Jet prev = Jet::constant(1.0, order);
  sum += prev * (a[0] * fns.constant(0));
  if (a.size() > 1) {
    Jet cur = (0.5 * (al + be + 2.0)) * x + Jet::constant((al + 1.0) - 0.5 * (al + be + 2.0), order);
    sum += cur * (a[1] * fns.constant(1));
    for (std::size_t i = 2; i < a.size(); ++i) {
      const double n = static_cast<double>(i);
      const double s = 2.0 * n + al + be;
      const double c1 = 2.0 * n * (n + al + be) * (s - 2.0);
      const double c2 = (s - 1.0) * ab_sq;
      const double c3 = (s - 2.0) * (s - 1.0) * s;
      const double c4 = 2.0 * (n + al - 1.0) * (n + be - 1.0) * s;
      Jet next = ((Jet::constant(c2, order) + c3 * x) * cur - c4 * prev) * (1.0 / c1);
      prev = std::move(cur);
      cur = std::move(next);
      sum += cur * (a[i] * fns.constant(i));
    }
  }
  return psi_jet(al, be, theta, order) * sum;
}

}  // namespace

Jet psi_jet(double a, double b, double theta, std::size_t order) {
  check_theta(theta);
  const Jet half = 0.5 * Jet::variable(theta, order);
  const auto [s, c] = sincos(half);
  return pow(sign_of(theta) * s, a + 0.5) * pow(c, b + 0.5);
}

Jet ladder_weight_jet(double a, double b, double theta, std::size_t order) {
  check_theta(theta);
  const Jet half = 0.5 * Jet::variable(theta, order);
  const auto [s, c] = sincos(half);
  return (0.25 * (2.0 * a + 1.0)) * (c / s) - (0.25 * (2.0 * b + 1.0)) * (s / c);
}

Jet expansion_jet(const SymmExpansion& e, double theta, std::size_t order) {
  check_theta(theta);
  const HalfLinePair<double> parts = to_halfline(e);
  return phi_series_jet(parts.from_even.params, parts.from_even.coeffs, theta, order) +
         sign_of(theta) * phi_series_jet(parts.from_odd.params, parts.from_odd.coeffs, theta, order);
}

Jet expansion_jet(const HalfLineExpansion& h, double theta, std::size_t order) {
  check_theta(theta);
  Jet j = phi_series_jet(h.params, h.coeffs, theta, order);
  if (h.parity == Parity::odd) j *= sign_of(theta);
  return j;
}

JetFunction as_jet_function(const SymmExpansion& e) {
  return [e](double theta, std::size_t order) { return expansion_jet(e, theta, order); };
}

JetFunction as_jet_function(const HalfLineExpansion& h) {
  return [h](double theta, std::size_t order) { return expansion_jet(h, theta, order); };
}

JetFunction apply_D(JetFunction f, double a, double b) {
  return [f = std::move(f), a, b](double theta, std::size_t order) {
    return f(theta, order + 1).differentiated() - ladder_weight_jet(a, b, theta, order) * f(theta, order);
  };
}

JetFunction apply_Dstar(JetFunction f, double a, double b) {
  return [f = std::move(f), a, b](double theta, std::size_t order) {
    return -f(theta, order + 1).differentiated() - ladder_weight_jet(a, b, theta, order) * f(theta, order);
  };
}

JetFunction apply_dunkl(JetFunction f, double a, double b) {
  return [f = std::move(f), a, b](double theta, std::size_t order) {
    return f(theta, order + 1).differentiated() -
           ladder_weight_jet(a, b, theta, order) * f(-theta, order).mirrored();
  };
}

JetFunction times_sign_power(JetFunction f, int k) {
  return [f = std::move(f), k](double theta, std::size_t order) {
    Jet j = f(theta, order);
    if (theta < 0.0 && k % 2 != 0) j *= -1.0;
    return j;
  };
}

double central_difference(const std::function<double(double)>& f, double theta, double h) {
  return (-f(theta + 2.0 * h) + 8.0 * f(theta + h) - 8.0 * f(theta - h) + f(theta - 2.0 * h)) /
         (12.0 * h);
}

bool fd_admissible(double theta, double h) noexcept {
  const double t = std::abs(theta);
  return t > 10.0 * h && std::numbers::pi - t > 10.0 * h;
}

}  // namespace symjac
