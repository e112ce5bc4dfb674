#ifndef REPANIM_RNG_HPP
#define REPANIM_RNG_HPP

#include <array>
#include <cstdint>

namespace repanim {

// Philox4x32-10 counter-based generator.  A (key, counter) pair maps to
// 128 output bits through ten bumped-key rounds; distinct counters give
// independent values, so Monte-Carlo code can address randomness by
// (trial, object) coordinates instead of advancing shared state.  Output
// is identical on every platform for a given seed.
class Philox {
 public:
  using Block = std::array<std::uint32_t, 4>;

  static Block round10(Block counter, std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
      counter = single_round(counter, key);
      key[0] += 0x9E3779B9u;  // golden-ratio Weyl increments
      key[1] += 0xBB67AE85u;
    }
    return counter;
  }

  explicit Philox(std::uint64_t seed) : seed_(seed) {}

  /// 128 bits addressed by (stream, index).  Streams separate purposes
  /// (edges vs vertices vs weights); the index enumerates objects.
  Block block(std::uint64_t stream, std::uint64_t index) const {
    Block ctr = {static_cast<std::uint32_t>(index),
                 static_cast<std::uint32_t>(index >> 32),
                 static_cast<std::uint32_t>(stream),
                 static_cast<std::uint32_t>(stream >> 32)};
    return round10(ctr, {static_cast<std::uint32_t>(seed_),
                         static_cast<std::uint32_t>(seed_ >> 32)});
  }

  std::uint64_t bits64(std::uint64_t stream, std::uint64_t index) const {
    Block b = block(stream, index);
    return (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
  }

  /// Uniform double in [0,1) with 53 random bits.
  double u01(std::uint64_t stream, std::uint64_t index) const {
    return static_cast<double>(bits64(stream, index) >> 11) * 0x1.0p-53;
  }

  /// Second independent uniform from the same block.
  double u01_hi(std::uint64_t stream, std::uint64_t index) const {
    Block b = block(stream, index);
    std::uint64_t hi = (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
    return static_cast<double>(hi >> 11) * 0x1.0p-53;
  }

  /// Exponential with the given mean (inverse CDF of u01).
  double exponential(std::uint64_t stream, std::uint64_t index,
                     double mean) const {
    // 1 - u01 is in (0,1], so the log argument never vanishes.
    return -mean * std::log1p(-u01(stream, index));
  }

  std::uint64_t seed() const { return seed_; }

  /// Derives a sub-seed, e.g. one seed per replication of an experiment.
  std::uint64_t derive(std::uint64_t label) const {
    Block b = block(0xF00DF00Du, label);
    return (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
  }

 private:
  static Block single_round(const Block& ctr,
                            const std::array<std::uint32_t, 2>& key) {
    const std::uint64_t m0 = 0xD2511F53ull * ctr[0];
    const std::uint64_t m1 = 0xCD9E8D57ull * ctr[2];
    return {static_cast<std::uint32_t>(m1 >> 32) ^ ctr[1] ^ key[0],
            static_cast<std::uint32_t>(m1),
            static_cast<std::uint32_t>(m0 >> 32) ^ ctr[3] ^ key[1],
            static_cast<std::uint32_t>(m0)};
  }

  std::uint64_t seed_;
};

// Stream labels used across the library so that different consumers of
// the same seed never collide.
enum class RngStream : std::uint64_t {
  kEdges = 1,
  kVertices = 2,
  kWeights = 3,
  kGreedyRestarts = 4,
  kWindows = 5,
  kAnimals = 6,
};

inline std::uint64_t stream_id(RngStream s) {
  return static_cast<std::uint64_t>(s);
}

}  // namespace repanim

#endif  // REPANIM_RNG_HPP
