#ifndef SYMJAC_NORMS_HPP
#define SYMJAC_NORMS_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symjac/basis.hpp"
#include "symjac/quadrature.hpp"

namespace symjac {

/// (int |f|^p dtheta)^{1/p} by the grid weights; p = inf gives the maximum over nodes.
double lp_norm(const RealGridFunction& f, double p);
double lp_norm(const ComplexGridFunction& f, double p);

/// L^p(-pi, pi) norm assembled from the half-line parts:
/// int |f|^p = int_0^pi |e + o|^p + |e - o|^p.
double lp_norm_from_parts(const RealGridFunction& even_plus, const RealGridFunction& odd_plus,
                          double p);

/// Parameters (a_p, b_p) with (Psi^{a_p,b_p})^2 = (Psi^{alpha,beta})^p. Requires p < p(alpha, beta).
JacobiParams lp_weight_params(const JacobiParams& params, double p);

/// Symmetric Gauss-Jacobi grid matched to |f|^p for f in S_{alpha,beta}: |f|^p is
/// (Psi^{alpha,beta})^p times |trigonometric polynomial|^p. At p = 2 it is the
/// ordinary symmetric rule and integrates |f|^2 exactly.
GridPtr lp_grid(const JacobiParams& params, double p, int count);
/// Half-line counterpart of lp_grid.
GridPtr lp_halfline_grid(const JacobiParams& params, double p, int count);

/// Riesz or Bessel form of the potential operators.
enum class PotentialForm { riesz, bessel };
PotentialForm potential_form(const JacobiParams& params) noexcept;

/// ||L^{s/2} e||_p (Bessel form (id + L)^{s/2} when alpha + beta = -1).
/// Throws AdmissibilityError unless p lies in E(alpha, beta).
double potential_norm(const SymmExpansion& e, double p, double s, const GridPtr& grid);

/// Half-line potential norm ||L_{a,b}^{s/2} h||_{L^p(0,pi)} with an explicit form.
double halfline_potential_norm(const HalfLineExpansion& h, double p, double s, const GridPtr& grid,
                               PotentialForm form);

/// Synthesizes sum of the two parity-tagged pieces on the grid.
RealGridFunction synthesize_pair(const HalfLinePair<double>& pair, const GridPtr& grid);

/// sum_{k=0}^m ||D^(k) e||_p with the variable-index higher derivatives.
double sobolev_norm(const SymmExpansion& e, double p, int m, const GridPtr& grid);

/// (fixed-index norm sum_k ||D^k e||_p, variable-index norm sum_k ||D_{a+k-1} ... D_{a} e||_p).
/// The variable-index terms are evaluated pointwise through Taylor jets.
std::pair<double, double> alt_sobolev_norms(const SymmExpansion& e, double p, int m,
                                            const GridPtr& grid);

/// Structured decision for exponent constraints.
struct Admissibility {
  bool p_in_range = false;                 // p in E(alpha, beta)
  std::optional<bool> lp_to_lq;            // 1/q >= 1/p - 2 sigma
  std::optional<bool> lp_to_linf;          // alpha, beta >= -1/2 and 1/p < 2 sigma
  std::optional<bool> embedding;           // 1/q >= 1/p - s, s = 2 sigma
  std::optional<bool> continuity;          // alpha, beta >= -1/2 and s > 1/p
  double p_lower = 1.0;
  double p_upper = 0.0;
};

Admissibility admissibility(const JacobiParams& params, double p, std::optional<double> q = {},
                            std::optional<double> sigma = {});

/// Samples F(theta_i, t_j) with theta on a symmetric grid and t on a midpoint rule over (0, 2 pi).
class SpaceTimeFunction {
 public:
  SpaceTimeFunction(GridPtr theta_grid, int time_count,
                    const std::function<std::complex<double>(std::size_t, double)>& f);

  static std::vector<double> time_nodes(int count);

  const QuadratureGrid& theta_grid() const noexcept { return *theta_; }
  std::size_t time_count() const noexcept { return times_.size(); }
  double time(std::size_t j) const { return times_[j]; }
  double time_weight() const noexcept { return time_weight_; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
    return values_[i * times_.size() + j];
  }

 private:
  GridPtr theta_;
  std::vector<double> times_;
  double time_weight_;
  std::vector<std::complex<double>> values_;
};

/// ||F||_{L^p_theta(L^q_t)}: inner q-norm in t per node, then the outer p-norm.
double mixed_norm(const SpaceTimeFunction& f, double p, double q);

/// Truncated integrals of a nonnegative integrand on (0, pi) over [eps_j, pi - eps_j].
struct DivergenceReport {
  std::vector<double> epsilon;
  std::vector<double> value;
  std::vector<double> growth;  // value[j+1] / value[j]
  double threshold = 1.5;
  bool divergent = false;
};

/// eps_j = eps0 / 2^j for j = 0..levels; divergent when every growth factor >= threshold.
DivergenceReport detect_divergence(const std::function<double(double)>& integrand, double eps0,
                                   int levels = 3, double threshold = 1.5);

}  // namespace symjac

#endif  // SYMJAC_NORMS_HPP
