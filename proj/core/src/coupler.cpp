#include "triphoton/coupler.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace triphoton {

Matrix3c Matrix3c::identity() {
  Matrix3c m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

Matrix3c Matrix3c::adjoint() const {
  Matrix3c m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

Matrix3c Matrix3c::operator*(const Matrix3c& rhs) const {
  Matrix3c m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      cdouble s = 0.0;
      for (int k = 0; k < 3; ++k) s += (*this)(r, k) * rhs(k, c);
      m(r, c) = s;
    }
  return m;
}

double Matrix3c::max_abs_diff(const Matrix3c& rhs) const {
  double worst = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs((*this)(r, c) - rhs(r, c)));
  return worst;
}

double Matrix3c::unitarity_defect() const { return (adjoint() * *this).max_abs_diff(identity()); }

ComplexMatrix::ComplexMatrix(int dim) : n_(dim) {
  if (dim < 0) throw std::invalid_argument("ComplexMatrix: negative dimension");
  a_.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), cdouble{0.0, 0.0});
}

Matrix3c coupling_matrix(const PhysicalParams& p) {
  Matrix3c m;
  m(0, 1) = p.g1;
  m(1, 0) = std::conj(p.g1);
  m(1, 2) = p.g2;
  m(2, 1) = std::conj(p.g2);
  return m;
}

DeviceParams canonicalize(const PhysicalParams& p) {
  if (p.t < 0) throw std::invalid_argument("canonicalize: interaction time must be non-negative");
  const double a1 = std::abs(p.g1);
  const double a2 = std::abs(p.g2);
  DeviceParams d;
  d.G = p.t * std::hypot(a1, a2);
  d.theta = (a1 == 0 && a2 == 0) ? 0.0 : std::atan2(a2, a1);
  d.psi = (a1 == 0) ? 0.0 : std::arg(p.g1);
  d.phi = (a2 == 0) ? 0.0 : std::arg(p.g2);
  return d;
}

Matrix3c transfer_matrix(const DeviceParams& d) {
  const double c = std::cos(d.theta);
  const double s = std::sin(d.theta);
  const double cg = std::cos(d.G);
  const double sg = std::sin(d.G);
  const cdouble eip = std::polar(1.0, d.psi);
  const cdouble eif = std::polar(1.0, d.phi);
  const cdouble im{0.0, 1.0};

  Matrix3c v;
  v(0, 0) = c * c * cg + s * s;
  v(0, 1) = -im * c * sg * eip;
  v(0, 2) = c * s * eif * eip * (cg - 1.0);
  v(1, 0) = -im * c * sg * std::conj(eip);
  v(1, 1) = cg;
  v(1, 2) = -im * s * sg * eif;
  v(2, 0) = c * s * std::conj(eif * eip) * (cg - 1.0);
  v(2, 1) = -im * s * sg * std::conj(eif);
  v(2, 2) = s * s * cg + c * c;
  return v;
}

Matrix3c transfer_matrix_expm(const PhysicalParams& p) {
  if (p.t < 0) {
    throw std::invalid_argument("transfer_matrix_expm: interaction time must be non-negative");
  }
  const Matrix3c m = coupling_matrix(p);
  Eigen::Matrix3cd em;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) em(r, c) = m(r, c);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(em);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("transfer_matrix_expm: eigendecomposition failed");
  }
  Eigen::Vector3cd phases;
  for (int i = 0; i < 3; ++i) {
    phases(i) = std::polar(1.0, -solver.eigenvalues()(i) * p.t);
  }
  const Eigen::Matrix3cd ev =
      solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();

  Matrix3c out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = ev(r, c);
  return out;
}

}  // namespace triphoton
