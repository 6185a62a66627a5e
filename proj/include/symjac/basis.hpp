#ifndef SYMJAC_BASIS_HPP
#define SYMJAC_BASIS_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symjac/jacobi.hpp"
#include "symjac/quadrature.hpp"

namespace symjac {

/// How a function on (0, pi) is extended to (-pi, pi): f(-t) = f(t) or f(-t) = -f(t).
enum class Parity { even, odd };

constexpr Parity flip(Parity p) noexcept { return p == Parity::even ? Parity::odd : Parity::even; }

/// Finite expansion sum_n a_n phi_n^{params} on (0, pi), with its extension parity.
template <class T>
struct BasicHalfLineExpansion {
  JacobiParams params;
  std::vector<T> coeffs;
  Parity parity = Parity::even;
};

/// Finite expansion sum_n b_n Phi_n^{params} on (-pi, pi); an element of S_{alpha,beta}.
template <class T>
struct BasicSymmExpansion {
  JacobiParams params;
  std::vector<T> coeffs;
};

using HalfLineExpansion = BasicHalfLineExpansion<double>;
using SymmExpansion = BasicSymmExpansion<double>;
using ComplexHalfLineExpansion = BasicHalfLineExpansion<std::complex<double>>;
using ComplexSymmExpansion = BasicSymmExpansion<std::complex<double>>;

/// Two half-line expansions coming from the even and the odd part of a
/// symmetric expansion. Parity tags record how each piece extends to (-pi, pi).
template <class T>
struct HalfLinePair {
  BasicHalfLineExpansion<T> from_even;
  BasicHalfLineExpansion<T> from_odd;
};

/// <n> = floor((n + 1) / 2).
constexpr int bracket(int n) noexcept { return (n + 1) / 2; }

/// Phi_n^{alpha,beta}(theta); 2^{-1/2} phi_{n/2} for even n and
/// 2^{-1/2} sign(theta) phi_{(n-1)/2}^{alpha+1,beta+1} for odd n.
double eval_Phi(int n, const JacobiParams& params, double theta);

/// Batch evaluation of Phi_0 .. Phi_{count-1} at one point.
class SymmetrizedFunctions {
 public:
  SymmetrizedFunctions(const JacobiParams& params, std::size_t count);

  std::size_t size() const noexcept { return count_; }
  const JacobiParams& params() const noexcept { return even_.params(); }
  void evaluate(double theta, std::span<double> out) const;

 private:
  std::size_t count_;
  JacobiFunctions even_;
  JacobiFunctions odd_;
};

/// f(-theta) sampled on a mirror-symmetric grid.
template <class T>
GridFunction<T> reflect(const GridFunction<T>& f);

/// (f_even^+, f_odd^+) on the positive half of a mirror-symmetric grid.
template <class T>
std::pair<GridFunction<T>, GridFunction<T>> split_even_odd(const GridFunction<T>& f);

/// Coefficients <f, Phi_n>, n < count, of a pointwise-evaluable function.
/// Even coefficients use the (alpha, beta) Gauss-Jacobi rule on f_even^+,
/// odd ones the (alpha+1, beta+1) rule on f_odd^+. quadrature_order <= 0
/// selects default_quadrature_order(count).
SymmExpansion analyze(const std::function<double(double)>& f, const JacobiParams& params,
                      int count, int quadrature_order = 0);

/// Coefficients of sampled data, using the grid weights as d(theta)-quadrature.
/// Exact for band-limited data on a symmetric Gauss-Jacobi grid of the same
/// parameters with enough nodes; throws ConfigurationError when the grid is too
/// small for the requested count.
SymmExpansion analyze(const RealGridFunction& f, const JacobiParams& params, int count);

/// sum_n b_n Phi_n(theta_i) at every node.
template <class T>
GridFunction<T> synthesize(const BasicSymmExpansion<T>& e, const GridPtr& grid);

/// sum_n a_n phi_n(|theta_i|), times sign(theta_i) for odd parity.
template <class T>
GridFunction<T> synthesize(const BasicHalfLineExpansion<T>& h, const GridPtr& grid);

/// Splits e into f_even^+ over (alpha, beta) and f_odd^+ over (alpha+1, beta+1),
/// coefficients b_{2n}/sqrt(2) and b_{2n+1}/sqrt(2) respectively.
template <class T>
HalfLinePair<T> to_halfline(const BasicSymmExpansion<T>& e);

/// Inverse of to_halfline. Accepts the two pieces in either order as long as one
/// is even over some (a, b) and the other odd over (a+1, b+1); otherwise nullopt.
template <class T>
std::optional<BasicSymmExpansion<T>> recombine(const BasicHalfLineExpansion<T>& first,
                                               const BasicHalfLineExpansion<T>& second);

template <class T>
std::optional<BasicSymmExpansion<T>> recombine(const HalfLinePair<T>& pair) {
  return recombine(pair.from_even, pair.from_odd);
}

}  // namespace symjac

#endif  // SYMJAC_BASIS_HPP
