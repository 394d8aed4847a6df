#pragma once

#include <cstdint>
#include <random>

#include "treesplit/spanning_tree.hpp"

namespace treesplit {

/// Reproducible random stream identified by (seed, stream_id). Every trial of
/// an experiment gets its own stream, so results do not depend on how trials
/// are scheduled across workers.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    // Lemire's multiply-and-reject.
    std::uint64_t x = engine_();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = engine_();
        m = static_cast<__uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform integer in [0, bound) for an arbitrary-precision bound.
  BigInt uniform_below(const BigInt& bound);

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// A child stream derived deterministically from this stream's identity and `tag`.
  RngStream derive(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace treesplit
