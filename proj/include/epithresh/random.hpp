#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace epithresh {

/// SplitMix64 finalizer (Steele, Lea & Flood); a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the private stream for task (a, b) under `master`:
/// mix64(mix64(mix64(master) ^ a) ^ b).
constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t a,
                                           std::uint64_t b) noexcept {
  return mix64(mix64(mix64(master) ^ a) ^ b);
}

/// Uniform doubles in [0, 1) from std::mt19937_64, using the top 53 bits of
/// each output so the stream is identical on every standard library.
class UniformDraws {
 public:
  explicit UniformDraws(std::uint64_t seed) : engine_(seed) {}

  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform index in [0, n); n must be positive.
  std::size_t index(std::size_t n) {
    const auto i = static_cast<std::size_t>((*this)() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace epithresh
