#pragma once

#include <cstdint>
#include <random>

namespace emgkit {

// All randomized code in the library draws through these helpers so that a
// (seed, inputs) pair reproduces bit-identical results across platforms and
// thread counts. std::uniform_*_distribution is implementation-defined and is
// deliberately avoided.

/// Uniform double in [0, 1) with 53 random bits.
inline double rng_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform index in [0, n). Multiplicative range reduction; the 2^-64 bias is
/// irrelevant at the sample counts involved here.
inline std::uint64_t rng_index(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

/// splitmix64 finalizer; used to derive per-fold seed streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Fisher-Yates shuffle driven by rng_index.
template <typename T>
void shuffle_deterministic(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng_index(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace emgkit
