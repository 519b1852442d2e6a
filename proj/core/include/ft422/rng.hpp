// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace ft422 {

// Counter-based random stream: every draw is a pure function of
// (seed, stream, counter), so results do not depend on how work is split
// across parallel lanes. Mixing is SplitMix64.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(mix(seed ^ mix(stream * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull))) {}

  // n-th value of the stream, independent of call history.
  std::uint64_t at(std::uint64_t counter) const {
    return mix(base_ + counter * 0x9e3779b97f4a7c15ull);
  }
  double uniform_at(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

  // Sequential convenience interface.
  std::uint64_t next() { return at(counter_++); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  RngStream substream(std::uint64_t stream) const {
    RngStream s(0, 0);
    s.base_ = mix(base_ ^ mix(stream * 0xbf58476d1ce4e5b9ull + 0x94d049bb133111ebull));
    return s;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace ft422
