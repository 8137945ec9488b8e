#pragma once

#include <array>
#include <compare>
#include <complex>
#include <vector>

namespace triphoton {

using cdouble = std::complex<double>;

/// Photon counts in the three modes of the device. Immutable value type.
class Occupation {
 public:
  Occupation() = default;

  /// Throws std::invalid_argument if any count is negative.
  Occupation(int n1, int n2, int n3);

  /// Count in `mode` (0-based).
  int operator[](int mode) const { return counts_[static_cast<std::size_t>(mode)]; }

  int total() const { return counts_[0] + counts_[1] + counts_[2]; }

  friend auto operator<=>(const Occupation&, const Occupation&) = default;

 private:
  std::array<int, 3> counts_{0, 0, 0};
};

/// All occupations with `n_photons` total, lexicographically descending:
/// (n,0,0), (n-1,1,0), (n-1,0,1), ..., (0,0,n). Size is (n+1)(n+2)/2.
std::vector<Occupation> enumerate_basis(int n_photons);

/// Position of `occ` within enumerate_basis(occ.total()).
int basis_index(const Occupation& occ);

/// Output amplitudes of a lossless evolution, dense over the canonical basis
/// of the input's photon total.
class OutputState {
 public:
  /// `amplitudes` must be aligned with enumerate_basis(input.total()).
  OutputState(const Occupation& input, std::vector<cdouble> amplitudes);

  const Occupation& input() const { return input_; }
  const std::vector<Occupation>& basis() const { return basis_; }
  const std::vector<cdouble>& amplitudes() const { return amps_; }

  cdouble amplitude(const Occupation& occ) const;

  /// Sum of |amplitude|^2; 1 for any unitary evolution.
  double norm_sq() const;

 private:
  Occupation input_;
  std::vector<Occupation> basis_;
  std::vector<cdouble> amps_;
};

/// Occupations with |amplitude| > tol, in canonical basis order.
std::vector<Occupation> support(const OutputState& state, double tol);

}  // namespace triphoton
