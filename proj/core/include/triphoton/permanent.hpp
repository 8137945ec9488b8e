#pragma once

#include "triphoton/fock.hpp"
#include "triphoton/matrix.hpp"

namespace triphoton {

/// Permanent by explicit permutation enumeration, O(N! * N). Oracle-grade
/// reference; rejects dim > 8.
cdouble permanent_enumerate(const ComplexMatrix& a);

/// Permanent by Ryser's inclusion-exclusion with Gray-code subset updates,
/// O(2^N * N). Production path; rejects dim > 30.
cdouble permanent_ryser(const ComplexMatrix& a);

/// Matrix whose permanent gives the (input -> output) transition: row i of
/// `v` repeated input[i] times, column j repeated output[j] times.
/// Throws std::invalid_argument on photon-count mismatch.
ComplexMatrix expand_matrix(const Matrix3c& v, const Occupation& input, const Occupation& output);

/// Bosonic transition amplitude
///   perm(expand_matrix(v, input, output)) / sqrt(prod(input_j!) * prod(output_j!)).
/// Throws std::invalid_argument on photon-count mismatch or totals > 30.
cdouble transition_amplitude(const Matrix3c& v, const Occupation& input, const Occupation& output);

}  // namespace triphoton
