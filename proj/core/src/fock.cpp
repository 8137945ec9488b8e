#include "triphoton/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace triphoton {

Occupation::Occupation(int n1, int n2, int n3) : counts_{n1, n2, n3} {
  if (n1 < 0 || n2 < 0 || n3 < 0) {
    throw std::invalid_argument("Occupation: photon counts must be non-negative");
  }
}

std::vector<Occupation> enumerate_basis(int n_photons) {
  if (n_photons < 0) {
    throw std::invalid_argument("enumerate_basis: photon number must be non-negative");
  }
  std::vector<Occupation> basis;
  basis.reserve(static_cast<std::size_t>((n_photons + 1) * (n_photons + 2) / 2));
  for (int k = n_photons; k >= 0; --k) {
    for (int l = n_photons - k; l >= 0; --l) {
      basis.emplace_back(k, l, n_photons - k - l);
    }
  }
  return basis;
}

int basis_index(const Occupation& occ) {
  const int n = occ.total();
  const int block = n - occ[0];  // occupations with a larger first count precede
  return block * (block + 1) / 2 + (n - occ[0] - occ[1]);
}

OutputState::OutputState(const Occupation& input, std::vector<cdouble> amplitudes)
    : input_(input), basis_(enumerate_basis(input.total())), amps_(std::move(amplitudes)) {
  if (amps_.size() != basis_.size()) {
    throw std::invalid_argument("OutputState: amplitude vector does not match basis size");
  }
}

cdouble OutputState::amplitude(const Occupation& occ) const {
  if (occ.total() != input_.total()) return 0.0;
  return amps_[static_cast<std::size_t>(basis_index(occ))];
}

double OutputState::norm_sq() const {
  double sum = 0;
  for (const cdouble& a : amps_) sum += std::norm(a);
  return sum;
}

std::vector<Occupation> support(const OutputState& state, double tol) {
  if (!(tol > 0)) {
    throw std::invalid_argument("support: tolerance must be positive");
  }
  std::vector<Occupation> out;
  for (std::size_t i = 0; i < state.basis().size(); ++i) {
    if (std::abs(state.amplitudes()[i]) > tol) out.push_back(state.basis()[i]);
  }
  return out;
}

}  // namespace triphoton
