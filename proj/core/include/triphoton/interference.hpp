#pragma once

#include <string>
#include <vector>

#include "triphoton/coupler.hpp"
#include "triphoton/fock.hpp"

namespace triphoton {

/// Full output state for `input` photons sent through the device, via the
/// permanent formula. Input totals up to 12 photons.
OutputState evolve(const DeviceParams& d, const Occupation& input);

/// Same state by direct multinomial expansion of the creation-operator
/// product; independent of the permanent path. Input totals up to 6.
OutputState evolve_multinomial(const DeviceParams& d, const Occupation& input);

/// Amplitude for the all-modes coincidence |1,1,1> -> |1,1,1>. Vanishes
/// exactly on the Hong-Ou-Mandel contour.
cdouble coincidence_amplitude(const DeviceParams& d);

/// How a contour point was obtained: a closed-form branch (sign choices and
/// the half-turn index n) or the numeric minimizer.
struct ContourBranch {
  bool analytic = false;
  int outer_sign = 0;  ///< sign in front of the arcsec term
  int inner_sign = 0;  ///< sign inside the square root
  int n = 0;           ///< theta offset in units of pi

  std::string label() const;  ///< "o+i-n0" style, or "numeric"
};

struct ContourPoint {
  double G = 0;
  double theta = 0;
  double c111_abs = 0;  ///< certified residual |c111| at (G, theta)
  ContourBranch branch;
};

/// All real solutions of the closed-form contour expression at this G, over
/// both sign choices and n in {0, 1}. Candidates with a complex-valued theta
/// are discarded; survivors are validated against |c111| <= residual_tol.
/// Empty when no real solution exists.
std::vector<ContourPoint> hom_contour_analytic(double G, double residual_tol = 1e-9);

/// Numeric contour tracer: scans |c111|^2 over the theta window (at least 720
/// samples per pi), refines each bracketed local minimum with Brent's
/// derivative-free minimizer to 1e-12 in theta, and keeps minima with
/// |c111|^2 <= accept_tol. Throws std::invalid_argument for an empty grid or
/// a degenerate window.
std::vector<ContourPoint> hom_contour_numeric(const std::vector<double>& g_grid,
                                              double theta_min, double theta_max,
                                              double accept_tol = 1e-18);

/// |c111|^2 sampled on a rectangular (G, theta) grid. Row-major with G as the
/// slow axis; values clamped to [0, 1].
struct Landscape {
  std::vector<double> g_values;
  std::vector<double> theta_values;
  std::vector<double> prob;  ///< row-major, size g_values.size() * theta_values.size()

  double at(int gi, int ti) const {
    return prob[static_cast<std::size_t>(gi) * theta_values.size() + static_cast<std::size_t>(ti)];
  }
};

/// Throws std::invalid_argument unless both resolutions are >= 2.
Landscape coincidence_landscape(double g_min, double g_max, double theta_min, double theta_max,
                                int g_res, int theta_res);

/// |V_jj V_kk + V_jk V_kj|: the coincidence amplitude of the effective
/// two-mode subdevice on modes j and k (1-based). Zero at the bipartite
/// special points, where the third mode decouples. Throws
/// std::invalid_argument for equal or out-of-range modes.
double two_photon_coincidence(const DeviceParams& d, int mode_j, int mode_k);

}  // namespace triphoton
