#pragma once

#include <cstdint>
#include <random>

namespace tracerec {

__extension__ using uint128_t = unsigned __int128;

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of stream `stream_id` under master seed `seed`. Streams never depend
/// on the order in which they are created.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id) noexcept {
  return mix64(mix64(seed) ^ mix64(stream_id + 0x632BE59BD9B4E019ULL));
}

/// Deterministic generator. Uses only the exactly specified mt19937_64 output
/// sequence and its own mappings, so draws agree across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream_id) : engine_(derive_seed(seed, stream_id)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); bound > 0.
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>((static_cast<uint128_t>(engine_()) * bound) >> 64);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace tracerec
