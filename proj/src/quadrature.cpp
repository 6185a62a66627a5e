#include "symjac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "symjac/errors.hpp"

namespace symjac {

QuadratureGrid::QuadratureGrid(std::vector<double> nodes, std::vector<double> weights,
                               Interval interval, std::optional<JacobiParams> source)
    : nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      interval_(interval),
      source_(source) {
  if (nodes_.size() != weights_.size()) throw GridError("node and weight counts differ");
  const double lo = interval_ == Interval::half_line ? 0.0 : -std::numbers::pi;
  const double hi = std::numbers::pi;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double t = nodes_[i];
    if (!(t > lo && t < hi)) throw GridError("grid node outside the open interval");
    if (interval_ == Interval::symmetric && t == 0.0) {
      throw GridError("theta = 0 cannot be a node of a symmetric grid");
    }
    if (i > 0 && !(t > nodes_[i - 1])) throw GridError("grid nodes must be strictly increasing");
    if (!(weights_[i] > 0.0)) throw GridError("grid weights must be positive");
  }
}

bool QuadratureGrid::is_mirror_symmetric() const noexcept {
  const std::size_t n = nodes_.size();
  if (n % 2 != 0) return false;
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (nodes_[i] != -nodes_[n - 1 - i] || weights_[i] != weights_[n - 1 - i]) return false;
  }
  return true;
}

std::size_t QuadratureGrid::mirror_index(std::size_t i) const {
  if (!is_mirror_symmetric()) throw GridError("grid is not symmetric under theta -> -theta");
  return nodes_.size() - 1 - i;
}

QuadratureGrid QuadratureGrid::positive_half() const {
  if (interval_ != Interval::symmetric || !is_mirror_symmetric()) {
    throw GridError("positive_half needs a mirror-symmetric grid on (-pi, pi)");
  }
  const std::size_t half = nodes_.size() / 2;
  return {std::vector<double>(nodes_.begin() + static_cast<std::ptrdiff_t>(half), nodes_.end()),
          std::vector<double>(weights_.begin() + static_cast<std::ptrdiff_t>(half), weights_.end()),
          Interval::half_line, source_};
}

double QuadratureGrid::integrate(std::span<const double> values) const {
  if (values.size() != nodes_.size()) throw GridError("value count does not match grid size");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += weights_[i] * values[i];
  return sum;
}

template <class T>
GridFunction<T>::GridFunction(GridPtr grid, std::vector<T> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw GridError("grid function needs a grid");
  if (values_.size() != grid_->size()) throw GridError("value count does not match grid size");
}

template <class T>
GridFunction<T>::GridFunction(GridPtr grid, const std::function<T(double)>& f)
    : grid_(std::move(grid)) {
  if (!grid_) throw GridError("grid function needs a grid");
  values_.reserve(grid_->size());
  for (double t : grid_->nodes()) values_.push_back(f(t));
}

template class GridFunction<double>;
template class GridFunction<std::complex<double>>;

namespace {

std::vector<double> golub_welsch_nodes(int count, double a, double b) {
  Eigen::VectorXd diag(count);
  Eigen::VectorXd sub(std::max(count - 1, 0));
  diag(0) = (b - a) / (a + b + 2.0);
  for (int n = 1; n < count; ++n) {
    const double s = 2.0 * n + a + b;
    diag(n) = (b * b - a * a) / (s * (s + 2.0));
    double off_sq;
    if (n == 1) {
      off_sq = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    } else {
      off_sq = 4.0 * n * (n + a) * (n + b) * (n + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(n - 1) = std::sqrt(off_sq);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConfigurationError("Golub-Welsch eigensolver failed");
  const Eigen::VectorXd& x = solver.eigenvalues();
  return {x.data(), x.data() + x.size()};
}

}  // namespace

QuadratureGrid gauss_jacobi_rule(int count, const JacobiParams& params) {
  if (count < 1) throw DomainError("quadrature rule needs at least one node");
  const double a = params.alpha();
  const double b = params.beta();
  const std::vector<double> x = golub_welsch_nodes(count, a, b);

  // theta ascending <=> x descending
  std::vector<double> nodes(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    nodes[i] = std::acos(std::clamp(x[x.size() - 1 - i], -1.0, 1.0));
  }

  const JacobiParams shifted = params.shifted(1);
  const double derivative_scale = 0.5 * (count + a + b + 1.0);
  std::vector<double> p_n(static_cast<std::size_t>(count) + 1);
  std::vector<double> q_n(static_cast<std::size_t>(count));
  for (double& t : nodes) {
    for (int iter = 0; iter < 3; ++iter) {
      const double c = std::cos(t);
      jacobi_poly_all(params, c, p_n);
      jacobi_poly_all(shifted, c, q_n);
      const double dp = -std::sin(t) * derivative_scale * q_n[static_cast<std::size_t>(count) - 1];
      if (dp == 0.0) break;
      const double step = p_n.back() / dp;
      const double next = t - step;
      if (!(next > 0.0 && next < std::numbers::pi)) break;
      t = next;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * t) break;
    }
  }
  std::sort(nodes.begin(), nodes.end());

  const JacobiFunctions functions(params, static_cast<std::size_t>(count));
  std::vector<double> weights(nodes.size());
  std::vector<double> phi(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    functions.evaluate(nodes[i], phi);
    double christoffel = 0.0;
    for (double v : phi) christoffel += v * v;
    weights[i] = 1.0 / christoffel;
  }
  return {std::move(nodes), std::move(weights), Interval::half_line, params};
}

QuadratureGrid symmetric_rule(int count, const JacobiParams& params) {
  const QuadratureGrid half = gauss_jacobi_rule(count, params);
  const std::size_t n = half.size();
  std::vector<double> nodes(2 * n);
  std::vector<double> weights(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[n + i] = half.node(i);
    weights[n + i] = half.weight(i);
    nodes[n - 1 - i] = -half.node(i);
    weights[n - 1 - i] = half.weight(i);
  }
  return {std::move(nodes), std::move(weights), Interval::symmetric, params};
}

}  // namespace symjac
