// Counter-derived pseudo-random substreams for reproducible Monte Carlo.
//
// Each replication gets its own splitmix64 stream keyed only on
// (seed, replication index), so splitting replications across workers can
// never change the draws. splitmix64 is a well-studied 64-bit mixer that
// passes the standard uniformity batteries.

#pragma once

#include <cstdint>

namespace robmed {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1); safe to feed inverse cdfs.
  double uniform_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Stream key for one replication: double-mixed so adjacent indices share
// no low-bit structure with adjacent seeds.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (0xA076'1D64'78BD'642Full * (index + 1)));
  mixer.next();
  return mixer.next();
}

}  // namespace robmed
