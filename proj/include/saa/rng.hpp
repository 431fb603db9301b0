#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace saa {

/// One splitmix64 step. Used for seed expansion and key mixing.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based seed derivation: the stream for (master, a, b, ...) depends
/// only on the key, never on which thread or in which order it is requested.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> key);

/// xoshiro256** generator. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  /// Standard normal variate (Marsaglia polar method).
  double normal();

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace saa
