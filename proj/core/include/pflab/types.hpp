#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pflab {

using Vec = std::vector<double>;

/// Invalid experiment/sampler configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid value passed to an operation (non-finite input, bad variance, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation called on a process kind it does not support.
struct UnsupportedProcessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// g(s) = 0 where the simulated-noise formula divides by it.
struct DegenerateDiffusionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Grid score queried below the density floor.
struct OutOfSupportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Too many diverged/out-of-support trajectories (CLI exit code 3).
struct RunFailureError : std::runtime_error {
  RunFailureError(const std::string& msg, double fraction)
      : std::runtime_error(msg), failure_fraction(fraction) {}
  double failure_fraction;
};

inline bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace pflab
