#ifndef SYMJAC_POINTWISE_HPP
#define SYMJAC_POINTWISE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "symjac/basis.hpp"
#include "symjac/jacobi.hpp"

namespace symjac {

/// Truncated Taylor series c_0 + c_1 e + ... + c_K e^K of a function around a point.
///
/// Arithmetic truncates to the shorter operand. Used to apply the first order
/// differential-difference operators pointwise, away from the coefficient maps.
class Jet {
 public:
  explicit Jet(std::size_t order) : c_(order + 1, 0.0) {}
  explicit Jet(std::vector<double> coeffs);

  static Jet constant(double value, std::size_t order);
  /// The identity map t -> t around t = at.
  static Jet variable(double at, std::size_t order);

  std::size_t order() const noexcept { return c_.size() - 1; }
  double operator[](std::size_t j) const { return c_[j]; }
  double& operator[](std::size_t j) { return c_[j]; }
  double value() const noexcept { return c_[0]; }
  /// j-th derivative, j! c_j.
  double derivative(std::size_t j) const;

  /// d/de; the order drops by one.
  Jet differentiated() const;
  /// Jet of e -> f(-e) built from the jet of f.
  Jet mirrored() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double a);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator-(Jet a) { return a *= -1.0; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

 private:
  std::vector<double> c_;
};

Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet exp(const Jet& u);
/// Requires u.value() > 0.
Jet log(const Jet& u);
/// u^r for u.value() > 0.
Jet pow(const Jet& u, double r);

/// Pointwise function given by its jet at any theta; the jet is in the variable theta.
using JetFunction = std::function<Jet(double theta, std::size_t order)>;

/// |sin(t/2)|^{a+1/2} cos(t/2)^{b+1/2} for arbitrary real a, b (no sign restriction).
Jet psi_jet(double a, double b, double theta, std::size_t order);

/// (2a+1)/4 cot(t/2) - (2b+1)/4 tan(t/2), the coefficient in D_{a,b} = d/dt - w_{a,b}.
Jet ladder_weight_jet(double a, double b, double theta, std::size_t order);

/// sum_n b_n Phi_n around theta (theta != 0).
Jet expansion_jet(const SymmExpansion& e, double theta, std::size_t order);
/// sum_n a_n phi_n around theta, times sign(theta) for odd parity.
Jet expansion_jet(const HalfLineExpansion& h, double theta, std::size_t order);

JetFunction as_jet_function(const SymmExpansion& e);
JetFunction as_jet_function(const HalfLineExpansion& h);

/// D_{a,b} f = f' - w_{a,b} f.
JetFunction apply_D(JetFunction f, double a, double b);
/// D*_{a,b} f = -f' - w_{a,b} f.
JetFunction apply_Dstar(JetFunction f, double a, double b);
/// Dunkl-type derivative with fixed parameters: f' - w_{a,b}(theta) f(-theta).
JetFunction apply_dunkl(JetFunction f, double a, double b);
/// sign(theta)^k f(theta).
JetFunction times_sign_power(JetFunction f, int k);

/// Default finite-difference step 1e-4 pi.
inline constexpr double fd_step = 1.0e-4 * 3.14159265358979323846;

/// Five-point central difference (-f(t+2h) + 8f(t+h) - 8f(t-h) + f(t-2h)) / (12h).
double central_difference(const std::function<double(double)>& f, double theta,
                          double h = fd_step);

/// True when theta keeps a distance > 10h from 0 and +-pi.
bool fd_admissible(double theta, double h = fd_step) noexcept;

}  // namespace symjac

#endif  // SYMJAC_POINTWISE_HPP
