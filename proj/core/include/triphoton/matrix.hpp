#pragma once

#include <array>
#include <complex>
#include <vector>

namespace triphoton {

using cdouble = std::complex<double>;

/// Dense 3x3 complex matrix, row-major.
class Matrix3c {
 public:
  static Matrix3c identity();

  cdouble& operator()(int r, int c) { return a_[static_cast<std::size_t>(3 * r + c)]; }
  cdouble operator()(int r, int c) const { return a_[static_cast<std::size_t>(3 * r + c)]; }

  Matrix3c adjoint() const;
  Matrix3c operator*(const Matrix3c& rhs) const;

  /// Largest entrywise |a - b|.
  double max_abs_diff(const Matrix3c& rhs) const;

  /// Max-entry |V†V - I|; zero for an exactly unitary matrix.
  double unitarity_defect() const;

 private:
  std::array<cdouble, 9> a_{};
};

/// Square complex matrix of run-time dimension. Used for the photon-expanded
/// matrices fed to the permanent routines.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);

  int dim() const { return n_; }

  cdouble& operator()(int r, int c) { return a_[static_cast<std::size_t>(n_ * r + c)]; }
  cdouble operator()(int r, int c) const { return a_[static_cast<std::size_t>(n_ * r + c)]; }

 private:
  int n_ = 0;
  std::vector<cdouble> a_;
};

}  // namespace triphoton
