#ifndef SYMJAC_OPERATORS_HPP
#define SYMJAC_OPERATORS_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "symjac/basis.hpp"
#include "symjac/jacobi.hpp"

namespace symjac {

/// A function m(lambda) of the Jacobi Laplacian, acting diagonally on coefficients.
///
/// On symmetric expansions index n sees lambda_{<n>}; on half-line expansions
/// it sees lambda_n of the expansion's own parameters.
class SpectralMultiplier {
 public:
  SpectralMultiplier(std::function<double(double)> symbol, std::string description);

  double operator()(double lambda) const { return symbol_(lambda); }
  const std::string& description() const noexcept { return description_; }

  std::vector<double> symmetric_table(const JacobiParams& params, std::size_t count) const;
  std::vector<double> halfline_table(const JacobiParams& params, std::size_t count) const;

  template <class T>
  BasicSymmExpansion<T> apply(const BasicSymmExpansion<T>& e) const;
  template <class T>
  BasicHalfLineExpansion<T> apply(const BasicHalfLineExpansion<T>& h) const;

  /// lambda^{-sigma}
  static SpectralMultiplier riesz(double sigma);
  /// (1 + lambda)^{-sigma}
  static SpectralMultiplier bessel(double sigma);
  /// (1 + sqrt(lambda))^{-s}
  static SpectralMultiplier modified(double s);
  /// exp(-t sqrt(lambda)) (-sqrt(lambda))^k
  static SpectralMultiplier poisson(double t, int derivative_order = 0);
  /// Potential of order s for these parameters: Riesz lambda^{-s/2}, or Bessel
  /// (1 + lambda)^{-s/2} when alpha + beta = -1. Negative s gives the inverse.
  static SpectralMultiplier potential(const JacobiParams& params, double s);

 private:
  std::function<double(double)> symbol_;
  std::string description_;
};

/// L^{-sigma}; throws UnsupportedParametersError when alpha + beta = -1.
SymmExpansion riesz_potential(const SymmExpansion& e, double sigma);
/// (id + L)^{-sigma}
SymmExpansion bessel_potential(const SymmExpansion& e, double sigma);
/// (id + L^{1/2})^{-s}
SymmExpansion modified_riesz_potential(const SymmExpansion& e, double s);
/// Poisson semigroup H_t.
SymmExpansion poisson(const SymmExpansion& e, double t);
/// d^k/dt^k H_t.
SymmExpansion poisson_dt(const SymmExpansion& e, double t, int k);
/// exp(i t L), unitary on coefficients.
ComplexSymmExpansion schrodinger(const SymmExpansion& e, double t);
ComplexSymmExpansion schrodinger(const ComplexSymmExpansion& e, double t);

/// Order-s potential (Riesz or Bessel by the parameters) and its inverse, the
/// preimage map g = L^{s/2} f that defines potential-space norms.
template <class T>
BasicSymmExpansion<T> potential(const BasicSymmExpansion<T>& e, double s);
template <class T>
BasicSymmExpansion<T> potential_preimage(const BasicSymmExpansion<T>& e, double s);
HalfLineExpansion potential_preimage(const HalfLineExpansion& h, double s);

/// d_n = sqrt(lambda_n - lambda_0) = sqrt(n (n + alpha + beta + 1)).
class LadderCoefficients {
 public:
  LadderCoefficients(const JacobiParams& params, std::size_t count);
  const JacobiParams& params() const noexcept { return params_; }
  double operator[](std::size_t n) const { return table_.at(n); }
  std::size_t size() const noexcept { return table_.size(); }

 private:
  JacobiParams params_;
  std::vector<double> table_;
};

double ladder_constant(int n, const JacobiParams& params);

/// D_{alpha,beta}: a_n phi_n^{alpha,beta} -> -d_n a_n phi_{n-1}^{alpha+1,beta+1}.
HalfLineExpansion ladder_D(const HalfLineExpansion& h);
/// D*_{alpha,beta} on an (alpha+1, beta+1) expansion: a_n -> -d_{n+1} a_n on phi_{n+1}^{alpha,beta}.
HalfLineExpansion ladder_Dstar(const HalfLineExpansion& h);

/// Dunkl-type derivative D_{alpha,beta} f = D f_even - D* f_odd on Phi coefficients.
/// The result has one more coefficient than the input.
SymmExpansion dunkl_derivative(const SymmExpansion& e);
/// k-fold composition of dunkl_derivative with fixed parameters.
SymmExpansion dunkl_power(const SymmExpansion& e, int k);

/// Variable index derivative D_{alpha+k-1,beta+k-1} ... D_{alpha,beta}; params shift by k.
HalfLineExpansion var_index_derivative(const HalfLineExpansion& h, int k);

/// Higher order derivative of a symmetric expansion: var_index_derivative on
/// the even part over (alpha, beta) and on the odd part over (alpha+1, beta+1).
/// With twisted set the result is multiplied by sign^k(theta), which for odd k
/// swaps both parity tags so that recombine() yields an (alpha+k, beta+k) expansion.
HalfLinePair<double> symm_higher_derivative(const SymmExpansion& e, int k, bool twisted = false);

/// R^k = D^k L^{-k/2} (Bessel form when alpha + beta = -1).
SymmExpansion riesz_transform_Dk(const SymmExpansion& e, int k);
/// Higher order derivative composed with the order-k potential.
HalfLinePair<double> riesz_transform_frak(const SymmExpansion& e, int k, bool twisted = false);

/// Matrix of R^k on span{Phi_0 .. Phi_{count-1}}; column n holds R^k e_n
/// (count + k rows).
Eigen::MatrixXd riesz_transform_matrix(const JacobiParams& params, int count, int k);

/// Zero-padded coefficient vector of the given length.
template <class T>
std::vector<T> padded(const std::vector<T>& coeffs, std::size_t length);

}  // namespace symjac

#endif  // SYMJAC_OPERATORS_HPP
