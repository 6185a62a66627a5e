#ifndef SYMJAC_TESTS_SUPPORT_HPP
#define SYMJAC_TESTS_SUPPORT_HPP

#include <array>
#include <memory>
#include <vector>

#include "symjac/basis.hpp"
#include "symjac/quadrature.hpp"

namespace testing_support {

inline const std::array<symjac::JacobiParams, 6>& default_params() {
  static const std::array<symjac::JacobiParams, 6> p{
      symjac::JacobiParams(-0.5, -0.5), symjac::JacobiParams(0.0, 0.0),
      symjac::JacobiParams(0.3, 0.7),   symjac::JacobiParams(1.0, 2.0),
      symjac::JacobiParams(-0.7, 0.4),  symjac::JacobiParams(2.5, 1.5)};
  return p;
}

inline symjac::GridPtr symmetric_grid(const symjac::JacobiParams& p, int n) {
  return std::make_shared<const symjac::QuadratureGrid>(symjac::symmetric_rule(n, p));
}

inline symjac::GridPtr half_grid(const symjac::JacobiParams& p, int n) {
  return std::make_shared<const symjac::QuadratureGrid>(symjac::gauss_jacobi_rule(n, p));
}

inline symjac::SymmExpansion unit(const symjac::JacobiParams& p, int n, int size) {
  symjac::SymmExpansion e{p, std::vector<double>(static_cast<std::size_t>(size), 0.0)};
  e.coeffs[static_cast<std::size_t>(n)] = 1.0;
  return e;
}

}  // namespace testing_support

#endif
