#pragma once

#include <cstdint>
#include <random>

#include "wychan/matrix.hpp"

namespace wychan {

/// SplitMix64 mix of (master, index): the per-trial substream derivation.
/// Trials seeded this way are independent and order-free, so campaigns
/// parallelize without changing any result.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic random stream: std::mt19937_64 (bit-exact by the standard)
/// with hand-rolled uniform/Gaussian transforms, so sequences replay
/// identically on any platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  static RandomStream for_trial(std::uint64_t master, std::uint64_t index) {
    return RandomStream(derive_seed(master, index));
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform();

  /// Uniform in (0, 1]; safe under log().
  double uniform_open();

  /// Standard real Gaussian via Box-Muller.
  double gaussian();

  /// Standard complex Gaussian (E|z|^2 = 1): sqrt(-ln u) e^{2 pi i v}.
  Complex complex_gaussian();

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace wychan
