#include "treesplit/rng.hpp"

#include <stdexcept>

namespace treesplit {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// One 64-bit mixed seed per (seed, stream) pair; distinct streams of one seed
// never share an engine seed because mix is a bijection.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
  return std::mt19937_64(mix(seed ^ mix(stream_id)));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(make_engine(seed, stream_id)) {}

RngStream RngStream::derive(std::uint64_t tag) const { return RngStream(mix(seed_ ^ mix(tag)), mix(stream_id_) ^ tag); }

BigInt RngStream::uniform_below(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  if (bound <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return BigInt(uniform_below(static_cast<std::uint64_t>(bound)));
  }
  // Rejection on the smallest covering power of two.
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  while (true) {
    BigInt x = 0;
    std::size_t have = 0;
    while (have < bits) {
      x <<= 64;
      x |= engine_();
      have += 64;
    }
    x >>= static_cast<unsigned>(have - bits);
    if (x < bound) return x;
  }
}

}  // namespace treesplit
