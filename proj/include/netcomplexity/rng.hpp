#pragma once

#include <cstdint>
#include <random>

namespace netcomplexity {

/// splitmix64 finalizer. Replica k of an ensemble run with master seed s is
/// seeded with mix64(s ^ k); the function is part of the reproducibility
/// contract and must not change.
std::uint64_t mix64(std::uint64_t x);

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  return mix64(seed ^ k);
}

/// mt19937_64 with portable bounded draws. The standard distributions are
/// implementation-defined, so bounded integers, uniforms and normals are
/// derived here from the raw (standardized) engine stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); rejection sampling, bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform real in (0, 1].
  double uniform01();

  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace netcomplexity
