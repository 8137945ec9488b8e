#pragma once

#include <complex>
#include <random>

#include "triphoton/coupler.hpp"

namespace test_helpers {

// Deterministic generators for the property-style tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  std::complex<double> complex_in_disk(double radius = 1.0) {
    for (;;) {
      const double re = uniform(-radius, radius);
      const double im = uniform(-radius, radius);
      if (re * re + im * im <= radius * radius) return {re, im};
    }
  }

  triphoton::DeviceParams device() {
    return {uniform(-2.0 * kPi, 4.0 * kPi), uniform(-kPi, 2.0 * kPi), uniform(-kPi, kPi),
            uniform(-kPi, kPi)};
  }

  triphoton::PhysicalParams physical() {
    return {complex_in_disk(2.0), complex_in_disk(2.0), uniform(0.0, 3.0)};
  }

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;
  std::mt19937_64 engine_;
};

}  // namespace test_helpers
