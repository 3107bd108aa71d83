// Deterministic Gaussian streams. Each stream is derived from a base seed
// and a stream index via SplitMix64, so per-trial draws are reproducible
// bit for bit regardless of scheduling or thread count.
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>

namespace msgain {

std::uint64_t splitmix64(std::uint64_t& state);

class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform on (0, 1].
  double next_uniform();
  /// Standard normal via Box-Muller (fixed mapping, platform-stable).
  double next_gaussian();
  Eigen::VectorXd next_gaussian_vector(int n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace msgain
