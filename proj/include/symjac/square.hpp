#ifndef SYMJAC_SQUARE_HPP
#define SYMJAC_SQUARE_HPP

#include <vector>

#include "symjac/basis.hpp"
#include "symjac/quadrature.hpp"

namespace symjac {

enum class SquareVariant { plain, modified, halfline };

/// Parameters (gamma, k) of a fractional square function; requires 0 < gamma < k.
class SquareFunctionSpec {
 public:
  SquareFunctionSpec(double gamma, int k, SquareVariant variant = SquareVariant::plain);

  double gamma() const noexcept { return gamma_; }
  int k() const noexcept { return k_; }
  SquareVariant variant() const noexcept { return variant_; }

  /// 2^{gamma-k} Gamma(2(k-gamma))^{1/2}, the value of g(Phi_n) / (lambda^{gamma/2} |Phi_n|).
  double eigen_constant() const;

 private:
  double gamma_;
  int k_;
  SquareVariant variant_;
};

/// Closed form: g^2 = sum_{n,m} b_n b_m Phi_n Phi_m (r_n r_m)^k Gamma(2(k-gamma)) / (r_n + r_m)^{2(k-gamma)}
/// with r_n = sqrt(lambda_<n>); modes with r_n = 0 are dropped.
RealGridFunction gfrak(const SymmExpansion& e, const SquareFunctionSpec& spec, const GridPtr& grid);

/// Half-line square function of sum a_n phi_n (with lambda_n in place of lambda_<n>).
RealGridFunction g_halfline(const HalfLineExpansion& h, const SquareFunctionSpec& spec,
                            const GridPtr& grid);

/// Square function of e^{-t} H_t: rate 1 + r_n, no mode is dropped.
RealGridFunction gfrak_modified(const SymmExpansion& e, const SquareFunctionSpec& spec,
                                const GridPtr& grid);

/// Reference evaluation of the same quantities by adaptive Gauss-Kronrod
/// integration in u = log t over [-30, 10]. Slow; used as an oracle.
RealGridFunction square_function_by_quadrature(const SymmExpansion& e, const SquareFunctionSpec& spec,
                                               const GridPtr& grid);
RealGridFunction square_function_by_quadrature(const HalfLineExpansion& h,
                                               const SquareFunctionSpec& spec, const GridPtr& grid);

}  // namespace symjac

#endif  // SYMJAC_SQUARE_HPP
