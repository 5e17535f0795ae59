#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gpcn {

// Seeded random stream. Conversions to floating point and integers are done
// here rather than through <random> distributions, whose algorithms are
// implementation-defined, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(Mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  // Independent child stream; the i-th child of a given seed is fixed.
  Rng split(std::uint64_t stream) const { return Rng(Mix(seed_ ^ Mix(stream + 1))); }

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform() < p; }
  // Box-Muller, one draw per call.
  double normal(double mean = 0.0, double stddev = 1.0);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // SplitMix64 finalizer.
  static std::uint64_t Mix(std::uint64_t x);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace gpcn
