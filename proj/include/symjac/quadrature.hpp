#ifndef SYMJAC_QUADRATURE_HPP
#define SYMJAC_QUADRATURE_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "symjac/jacobi.hpp"

namespace symjac {

enum class Interval { half_line, symmetric };

/// Nodes with positive d(theta)-weights on (0, pi) or (-pi, pi) \ {0}.
///
/// Nodes are strictly increasing and strictly inside the interval; theta = 0
/// never appears on a symmetric grid. A grid built from a Gauss-Jacobi rule
/// remembers the parameter pair it came from.
class QuadratureGrid {
 public:
  QuadratureGrid(std::vector<double> nodes, std::vector<double> weights, Interval interval,
                 std::optional<JacobiParams> source = std::nullopt);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  Interval interval() const noexcept { return interval_; }
  const std::optional<JacobiParams>& source() const noexcept { return source_; }

  /// True when nodes[i] == -nodes[size-1-i] and weights agree bitwise.
  bool is_mirror_symmetric() const noexcept;

  /// Index of the node at -theta_i; throws GridError on asymmetric grids.
  std::size_t mirror_index(std::size_t i) const;

  /// Positive half of a mirror-symmetric grid, as a half-line grid.
  QuadratureGrid positive_half() const;

  /// Integral of sampled values with the stored weights.
  double integrate(std::span<const double> values) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  Interval interval_;
  std::optional<JacobiParams> source_;
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

/// Sampled function values tied to a grid, one value per node.
template <class T>
class GridFunction {
 public:
  GridFunction(GridPtr grid, std::vector<T> values);
  /// Samples f at every grid node.
  GridFunction(GridPtr grid, const std::function<T(double)>& f);

  const QuadratureGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::span<const T> values() const noexcept { return values_; }
  const T& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  GridPtr grid_;
  std::vector<T> values_;
};

using RealGridFunction = GridFunction<double>;
using ComplexGridFunction = GridFunction<std::complex<double>>;

/// N-point Gauss-Jacobi rule mapped to (0, pi) through x = cos(theta).
///
/// Weights are d(theta)-weights: sum_i w_i F(theta_i) is exact for
/// F = Psi^2 * q(cos theta) with deg q <= 2N - 1. Nodes come from the
/// symmetric tridiagonal (Golub-Welsch) eigenproblem followed by Newton
/// polishing in theta; weights are reciprocal Christoffel sums.
QuadratureGrid gauss_jacobi_rule(int count, const JacobiParams& params);

/// Mirrored Gauss-Jacobi rule with nodes {+-theta_i}, 2N nodes in total.
QuadratureGrid symmetric_rule(int count, const JacobiParams& params);

/// Default quadrature size 2 * truncation + 16.
constexpr int default_quadrature_order(int truncation) noexcept { return 2 * truncation + 16; }

}  // namespace symjac

#endif  // SYMJAC_QUADRATURE_HPP
