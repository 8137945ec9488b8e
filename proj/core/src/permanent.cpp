#include "triphoton/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace triphoton {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

cdouble permanent_enumerate(const ComplexMatrix& a) {
  const int n = a.dim();
  if (n > 8) throw std::invalid_argument("permanent_enumerate: dimension capped at 8");
  if (n == 0) return 1.0;

  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 0);
  cdouble total = 0.0;
  do {
    cdouble prod = 1.0;
    for (int r = 0; r < n; ++r) prod *= a(r, cols[static_cast<std::size_t>(r)]);
    total += prod;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return total;
}

namespace {

// perm(A) = sum over nonempty column subsets S of (-1)^(n-|S|) prod_r (sum_{c in S} A_rc).
// Subsets walk a Gray code so each step updates the row sums by one column.
template <typename Real>
cdouble ryser_impl(const ComplexMatrix& a) {
  using C = std::complex<Real>;
  const int n = a.dim();
  std::vector<C> row_sum(static_cast<std::size_t>(n), C{});
  C total{};
  std::uint32_t prev_gray = 0;
  const std::uint32_t end = 1u << n;
  for (std::uint32_t k = 1; k < end; ++k) {
    const std::uint32_t gray = k ^ (k >> 1);
    const std::uint32_t changed = gray ^ prev_gray;
    const int col = std::countr_zero(changed);
    const Real step = (gray & changed) ? Real(1) : Real(-1);
    for (int r = 0; r < n; ++r) row_sum[static_cast<std::size_t>(r)] += step * C(a(r, col));

    C prod = C(Real(1));
    for (int r = 0; r < n; ++r) prod *= row_sum[static_cast<std::size_t>(r)];
    const int popcount = std::popcount(gray);
    total += ((n - popcount) % 2 == 0) ? prod : -prod;
    prev_gray = gray;
  }
  return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

}  // namespace

cdouble permanent_ryser(const ComplexMatrix& a) {
  const int n = a.dim();
  if (n > 30) throw std::invalid_argument("permanent_ryser: dimension capped at 30");
  if (n == 0) return 1.0;
  // Expanded matrices repeat rows and columns, which makes the subset
  // products large while the alternating sum cancels to O(1); from dimension
  // 8 on, extended precision is needed to keep amplitudes accurate to ~1e-15
  // over the 12-photon evolution range.
  return (n <= 7) ? ryser_impl<double>(a) : ryser_impl<long double>(a);
}

ComplexMatrix expand_matrix(const Matrix3c& v, const Occupation& input, const Occupation& output) {
  const int n = input.total();
  if (n != output.total()) {
    throw std::invalid_argument("expand_matrix: input and output photon totals differ");
  }
  std::vector<int> rows, cols;
  rows.reserve(static_cast<std::size_t>(n));
  cols.reserve(static_cast<std::size_t>(n));
  for (int mode = 0; mode < 3; ++mode) {
    for (int i = 0; i < input[mode]; ++i) rows.push_back(mode);
    for (int i = 0; i < output[mode]; ++i) cols.push_back(mode);
  }
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = v(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
  return m;
}

cdouble transition_amplitude(const Matrix3c& v, const Occupation& input, const Occupation& output) {
  if (input.total() != output.total()) {
    throw std::invalid_argument("transition_amplitude: input and output photon totals differ");
  }
  if (input.total() > 30) {
    throw std::invalid_argument("transition_amplitude: photon total capped at 30");
  }
  double norm = 1.0;
  for (int mode = 0; mode < 3; ++mode) {
    norm *= factorial(input[mode]) * factorial(output[mode]);
  }
  return permanent_ryser(expand_matrix(v, input, output)) / std::sqrt(norm);
}

}  // namespace triphoton
