#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace pflab {

// Counter-based deterministic random streams. Every draw is a pure function
// of (seed, stream, step, slot), so simulations are reproducible and
// independent of thread count or evaluation order. The mixer is the
// SplitMix64 finalizer, applied to each key word in turn.

inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t counter_raw(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t step, std::uint64_t slot) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ stream);
  h = mix64(h ^ step);
  h = mix64(h ^ slot);
  return h;
}

/// Uniform in the open interval (0, 1).
inline double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t step, std::uint64_t slot) {
  const std::uint64_t r = counter_raw(seed, stream, step, slot);
  return (static_cast<double>(r >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on two counter uniforms.
inline double counter_normal(std::uint64_t seed, std::uint64_t stream,
                             std::uint64_t step, std::uint64_t slot) {
  const double u1 = counter_uniform(seed, stream, step, 2 * slot);
  const double u2 = counter_uniform(seed, stream, step, 2 * slot + 1);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

inline void counter_normal_fill(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t step, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = counter_normal(seed, stream, step, i);
  }
}

// Reserved step indices so initialization draws never collide with per-step
// noise (step indices used by samplers stay far below 2^62).
inline constexpr std::uint64_t kInitStep = 0x4000000000000000ULL;

}  // namespace pflab
