#pragma once

#include <array>
#include <functional>
#include <vector>

#include "triphoton/coupler.hpp"
#include "triphoton/fock.hpp"

namespace triphoton {

/// Structural families of three-photon output states found on the HOM
/// contour, keyed by support set and magnitude multiset (phases ignored).
enum class StateFamily {
  /// (|2_j,0_k> + |0_j,2_k>) |1_l> / sqrt(2): one mode separable, the other
  /// two maximally entangled.
  bipartite,
  /// Six outputs with magnitudes {sqrt(3)/4 x2, 1/4 x2, 1/2 x2}.
  tripartite_six_term,
  /// Seven outputs with magnitudes {sqrt(2)/3, 1/(3 sqrt(2)) x2, 1/sqrt(6) x4}.
  tripartite_seven_term,
  unclassified,
};

const char* to_string(StateFamily family);

struct StateClass {
  StateFamily family = StateFamily::unclassified;
  /// (j, k, l) mode assignment, 1-based; meaningful only when classified.
  std::array<int, 3> modes{0, 0, 0};
};

/// Match a 3-photon state against the special-state templates over all mode
/// permutations in lexicographic order; first hit wins. Support is taken at
/// |amplitude| > tol and magnitudes must match within tol.
/// Throws std::invalid_argument unless the state has exactly 3 photons.
StateClass classify(const OutputState& state, double tol);

/// Integer/phase parameters a fixture column is evaluated at. `n` doubles as
/// the period-4 index for the columns whose theta is built from 4n+r.
struct FixtureParams {
  int m = 0;
  int n = 0;
  double psi = 0;
  double phi = 0;
};

/// One tabulated coefficient: unit prefactor (+-1, +-i), parities in n and m,
/// exact squared magnitude as a rational, and the e^{i(a psi + b phi)} phase.
struct FixtureCoefficient {
  Occupation occ;
  cdouble unit;
  int parity_n = 0;
  int parity_m = 0;
  int mag_sq_num = 0;
  int mag_sq_den = 1;
  int psi_factor = 0;
  int phi_factor = 0;

  cdouble value(const FixtureParams& p) const;
  double magnitude() const;
};

/// One column of the special-state coefficient tables: a parameterized device
/// coordinate family plus the closed-form nonzero output coefficients.
/// Coefficients not listed are exactly zero.
struct TableFixture {
  int table = 0;   ///< 1..5
  int column = 0;  ///< 1-based within the table
  bool theta_uses_ntilde = false;  ///< n enters theta as 4n+r
  StateFamily family = StateFamily::unclassified;
  std::array<int, 3> modes{0, 0, 0};  ///< expected (j,k,l) from classify()
  std::function<DeviceParams(const FixtureParams&)> coords;
  std::vector<FixtureCoefficient> coefficients;
};

/// All coefficient-table columns (47 of them), machine-readable.
const std::vector<TableFixture>& special_state_fixtures();

struct VerificationRecord {
  int table = 0;
  int column = 0;
  FixtureParams params;
  bool pass = false;
  double max_dev = 0;  ///< worst |computed - expected| over the full basis
};

struct VerificationReport {
  double tol = 0;
  std::vector<VerificationRecord> records;

  bool all_pass() const;
  double max_dev() const;
};

/// Evaluate one fixture column at one parameter point against evolve().
VerificationRecord verify_fixture(const TableFixture& fixture, const FixtureParams& params,
                                  double tol = 1e-10);

/// Evaluate every fixture column at every sample. Records are ordered by
/// (table, column, sample).
VerificationReport verify_fixtures(const std::vector<FixtureParams>& samples, double tol = 1e-10);

/// The m,n in {0,1,2} x (psi,phi) in {(0,0),(0.7,-1.3)} sweep used by the
/// verify-tables command.
std::vector<FixtureParams> default_fixture_samples();

}  // namespace triphoton
