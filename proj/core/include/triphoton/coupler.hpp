#pragma once

#include <complex>

#include "triphoton/matrix.hpp"

namespace triphoton {

/// Physical description of the coupler: complex coupling rates between
/// neighbouring waveguides and the interaction time set by the device length.
struct PhysicalParams {
  cdouble g1;     ///< coupling mode 1 <-> mode 2, units 1/time
  cdouble g2;     ///< coupling mode 2 <-> mode 3, units 1/time
  double t = 0;   ///< interaction time, >= 0
};

/// Canonical dimensionless parameterization. G is the overall interaction
/// strength t*sqrt(|g1|^2+|g2|^2), theta the coupling mixing angle
/// (g1*t = G cos(theta) e^{i psi}, g2*t = G sin(theta) e^{i phi}).
/// Arbitrary real G and theta are accepted as inputs.
struct DeviceParams {
  double G = 0;
  double theta = 0;
  double psi = 0;
  double phi = 0;
};

/// Hermitian nearest-neighbour coupling matrix: M12 = g1, M23 = g2, outer
/// modes uncoupled.
Matrix3c coupling_matrix(const PhysicalParams& p);

/// Canonical (G, theta, psi, phi) for given physical parameters, with
/// G >= 0, theta in [0, pi/2]. Phases of vanishing couplings are set to 0.
/// Throws std::invalid_argument if p.t < 0.
DeviceParams canonicalize(const PhysicalParams& p);

/// Closed-form unitary transfer matrix relating input-mode to output-mode
/// creation operators. This is the production path.
Matrix3c transfer_matrix(const DeviceParams& d);

/// The same transfer matrix computed as e^{-iMt} via eigendecomposition of
/// the Hermitian coupling matrix. Cross-check path for transfer_matrix().
/// Throws std::invalid_argument if p.t < 0.
Matrix3c transfer_matrix_expm(const PhysicalParams& p);

}  // namespace triphoton
