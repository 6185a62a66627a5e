#ifndef SYMJAC_JACOBI_HPP
#define SYMJAC_JACOBI_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace symjac {

/// Type parameters (alpha, beta) of a Jacobi system, both > -1.
///
/// Besides the raw pair this carries the derived quantities used across the
/// library: the spectral shift A = (alpha + beta + 1) / 2 and the admissible
/// exponent interval E(alpha, beta) = (p', p).
class JacobiParams {
 public:
  JacobiParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// A = (alpha + beta + 1) / 2.
  double shift() const noexcept { return 0.5 * (alpha_ + beta_ + 1.0); }

  /// True when alpha + beta = -1, i.e. the bottom eigenvalue vanishes.
  bool zero_bottom_eigenvalue() const noexcept;

  /// (alpha + k, beta + k); throws DomainError if the result leaves (-1, inf).
  JacobiParams shifted(int k = 1) const;

  /// Upper end p(alpha, beta) of E; +inf when alpha, beta >= -1/2.
  double p_upper() const noexcept;
  /// Lower end p'(alpha, beta), the conjugate exponent of p_upper().
  double p_lower() const noexcept;
  /// Strict membership p' < p < p_upper.
  bool admits(double p) const noexcept;

  /// Equal up to 1e-12 in each parameter, so that shifting by +1 and back compares equal.
  friend bool operator==(const JacobiParams& a, const JacobiParams& b) noexcept {
    return std::abs(a.alpha_ - b.alpha_) <= 1e-12 && std::abs(a.beta_ - b.beta_) <= 1e-12;
  }

 private:
  double alpha_;
  double beta_;
};

/// P_n^{alpha,beta}(x) (Szegő normalization) by forward three-term recurrence.
double jacobi_poly(int n, const JacobiParams& params, double x);

/// Fills out[j] = P_j^{alpha,beta}(x) for j < out.size().
void jacobi_poly_all(const JacobiParams& params, double x, std::span<double> out);

/// Psi^{alpha,beta}(theta) = |sin(theta/2)|^{alpha+1/2} cos(theta/2)^{beta+1/2}.
double psi_weight(const JacobiParams& params, double theta);

/// lambda_n = (n + A)^2.
double eigenvalue(int n, const JacobiParams& params) noexcept;

/// c_n > 0 with int_0^pi (c_n Psi P_n(cos))^2 dtheta = 1, via log-gamma.
double norm_constant(int n, const JacobiParams& params);

/// phi_n(theta) = c_n Psi(theta) P_n(cos theta), evenly extended to (-pi, pi).
double eval_phi(int n, const JacobiParams& params, double theta);

/// Precomputed normalization table for batch evaluation of phi_0 .. phi_{count-1}.
class JacobiFunctions {
 public:
  JacobiFunctions(const JacobiParams& params, std::size_t count);

  const JacobiParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return constants_.size(); }
  double constant(std::size_t n) const { return constants_[n]; }

  /// out[n] = phi_n(theta) for n < min(out.size(), size()).
  void evaluate(double theta, std::span<double> out) const;
  std::vector<double> evaluate(double theta) const;

 private:
  JacobiParams params_;
  std::vector<double> constants_;
};

}  // namespace symjac

#endif  // SYMJAC_JACOBI_HPP
