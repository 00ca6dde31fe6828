#ifndef MAXCUT_RNG_HPP
#define MAXCUT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace maxcut {

/// SplitMix64 mixing step. Used only for deriving sub-task seeds; the fixed
/// constants make the derivation identical on every platform.
constexpr std::uint64_t split_mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Derives a child seed from a base seed and an ordered list of tags
/// (cluster index, solver ordinal, recursion level, ...). Collision-free in
/// practice and independent of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = split_mix64(base);
  for (std::uint64_t t : tags) h = split_mix64(h ^ split_mix64(t));
  return h;
}

/// Seedable PRNG used everywhere randomness is needed. The engine is
/// std::mt19937_64, whose output sequence is fixed by the standard; the
/// distribution mappings are implemented here because the std::
/// distribution objects are not reproducible across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform index in [0, n). Multiply-shift mapping; bias is O(n / 2^64).
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  /// Standard normal via Box-Muller (cosine branch).
  double normal() {
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace maxcut

#endif
