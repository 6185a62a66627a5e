#ifndef VERIFLAB_EXPERIMENTS_HPP
#define VERIFLAB_EXPERIMENTS_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "symjac/basis.hpp"
#include "symjac/ensemble.hpp"
#include "symjac/norms.hpp"
#include "symjac/square.hpp"

// Numerical experiments shared by the verification suites and the acceptance runner.
namespace veriflab {

using symjac::GridPtr;
using symjac::JacobiParams;
using symjac::RatioStats;
using symjac::SymmExpansion;

/// Grids are reused across ensemble members; the cache is thread safe.
GridPtr cached_symmetric_grid(const JacobiParams& params, int count);
GridPtr cached_lp_grid(const JacobiParams& params, double p, int count);
GridPtr cached_lp_halfline_grid(const JacobiParams& params, double p, int count);
/// 1000 Chebyshev-type nodes pi cos((i + 1/2) pi / 1000), for sup norms.
GridPtr sup_grid();

/// Grid size used for an expansion with `size` coefficients: 2 size + 16 nodes per half.
int grid_order(std::size_t size);

struct GramResult {
  double half_line = 0.0;  // max |<phi_m, phi_n> - delta|
  double symmetric = 0.0;  // max |<Phi_m, Phi_n> - delta|
};
/// Gram deviations for n < count on Gauss-Jacobi grids of the given order.
GramResult gram_deviation(const JacobiParams& params, int count, int order);

struct FourierResult {
  double even = 0.0;  // phi_n against (2/pi)^{1/2} cos(n t), n >= 1
  double odd = 0.0;   // Phi_{2n+1} against pi^{-1/2} sin((n+1) t)
};
/// alpha = beta = -1/2 closed forms on `nodes` equispaced midpoints of (-pi, pi).
FourierResult fourier_deviation(int count, int nodes);

/// max over n <= nmax of |(-D^2 + A^2) e_n - lambda_<n> e_n|_inf / max(1, lambda_<n>).
double eigen_relation_deviation(const JacobiParams& params, int nmax);

struct LadderFdResult {
  double d = 0.0;      // ladder_D against the finite-difference D
  double dstar = 0.0;  // ladder_Dstar against the finite-difference D*
};
/// Relative sup-deviation on interior Gauss-Jacobi nodes for n <= nmax.
LadderFdResult ladder_fd_deviation(const JacobiParams& params, int nmax);

/// max relative coefficient deviation of P^{s/2} P^{t/2} f from P^{(s+t)/2} f,
/// P the Riesz potential (Bessel when alpha + beta = -1).
double composition_deviation(const SymmExpansion& f, double s, double t);

struct IsometryResult {
  double coeff = 0.0;  // relative deviation of the two preimages
  double norm = 0.0;   // relative deviation of the two potential norms
};
/// Compares ||P^{t/2} f||_{L^{p,s+t}} with ||f||_{L^{p,s}}.
IsometryResult isometry_deviation(const SymmExpansion& f, double p, double s, double t);

/// Norm ratio statistics at the ensemble truncation and at twice that truncation.
struct RefinedWindow {
  RatioStats coarse;
  RatioStats fine;
  double min_change() const;  // |fine.min / coarse.min - 1|
  double max_change() const;
  bool stable(double tolerance) const { return min_change() <= tolerance && max_change() <= tolerance; }
};
RefinedWindow refined_window(const symjac::NormFunction& a, const symjac::NormFunction& b,
                             const symjac::EnsembleSpec& spec, unsigned threads = 0);

/// ||f||_{L^{p,s}} on the weight-matched grid.
double potential_norm_lp(const SymmExpansion& f, double p, double s);
/// 2^{1/p} (||f_even^+||^p + ||f_odd^+||^p)^{1/p}, half-line potential norms over (alpha, beta) and
/// (alpha+1, beta+1), in the form (Riesz or Bessel) that the full line uses.
double split_potential_norm(const SymmExpansion& f, double p, double s);
/// sum_{k<=m} ||D^(k) f||_p.
double sobolev_norm_lp(const SymmExpansion& f, double p, int m);
/// sum_{k<=m} ||D^k f||_p with fixed parameters.
double dunkl_sobolev_norm_lp(const SymmExpansion& f, double p, int m);
/// ||f||_q, or the maximum over sup_grid() for q = inf.
double lq_norm(const SymmExpansion& f, double q);
/// ||g f||_p for the plain or modified square function.
double square_norm_lp(const SymmExpansion& f, const symjac::SquareFunctionSpec& spec, double p);

struct SquareConstantResult {
  double worst = 0.0;              // max relative deviation from the constant
  std::vector<double> per_index;   // ||g Phi_n||_2 / lambda^{gamma/2}, NaN where lambda = 0
};
SquareConstantResult square_constant(const JacobiParams& params, const symjac::SquareFunctionSpec& spec,
                                     int nmax);
/// max relative deviation of the closed form from the t-quadrature oracle on a 24-node grid.
double square_oracle_deviation(const SymmExpansion& f, const symjac::SquareFunctionSpec& spec);

/// sign(t) Psi^{-alpha-1,-beta-1}: D-term vanishes, D^(1) leaves L^p.
struct WitnessOne {
  bool hypothesis = false;  // alpha, beta < 1/p - 1/2
  double residual = 0.0;    // relative |Dunkl f| through Taylor jets
  double fd_residual = 0.0; // same by finite differences, on [0.05, pi - 0.05]
  double closed_form = 0.0; // closed form of D^(1) f^+ against finite differences
  symjac::DivergenceReport lp;        // |f|^p, expected finite
  symjac::DivergenceReport derivative;  // |D^(1) f|^p, expected divergent
};
WitnessOne witness_one(const JacobiParams& params, double p, double eps0);

/// sign(t) Psi^{alpha+1,beta+1}: D^(1), D^(2) vanish, D_{a+1,b+1} D_{a,b} leaves L^p.
struct WitnessTwo {
  bool hypothesis = false;  // alpha <= 1/2 - 1/p or beta <= 1/2 - 1/p
  double spectral = 0.0;    // largest coefficient of D^(1) g, D^(2) g relative to |g|
  double pointwise = 0.0;   // relative jet residuals of the two half-line derivatives
  double fd = 0.0;          // relative finite-difference residual of D_{a+1,b+1} g^+
  symjac::DivergenceReport lp;
  symjac::DivergenceReport second;  // |D_{a+1,b+1} D_{a,b} g|^p
};
WitnessTwo witness_two(const JacobiParams& params, double p, double eps0);

/// Psi^{own} has vanishing D_{own} term and an |D_{other} Psi^{own}|^p integral that diverges.
struct CrossWitness {
  double residual = 0.0;
  symjac::DivergenceReport lp;
  symjac::DivergenceReport other;
};
CrossWitness cross_witness(const JacobiParams& own, const JacobiParams& other, double p, double eps0);

struct SchrodingerResult {
  std::vector<double> t;
  std::vector<double> error;  // max over nodes |exp(itL) f - f|
  std::vector<double> bound;  // t lambda_max ||b||_1
  double slope = 0.0;         // least-squares slope of log error against log t
  bool bound_holds = true;
};
SchrodingerResult schrodinger_convergence(const SymmExpansion& f, int jmin, int jmax);

/// ||exp(itL) f||_{L^p_theta L^q_t} / ||f||_{L^{2, s + 1 - 2/q}}.
double schrodinger_mixed_ratio(const SymmExpansion& f, double p, double q, double s);

}  // namespace veriflab

#endif  // VERIFLAB_EXPERIMENTS_HPP
